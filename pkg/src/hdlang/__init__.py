"""hdlang: language identification with hyperdimensional n-gram vectors."""

from .alphabet import AlphabetConfig, normalize
from .classify import Ranking, SimilarityMatrix, classify, query_next_symbol, similarity_matrix
from .encoder import (
    Basis,
    EncoderConfig,
    TextVector,
    encode_ngram,
    encode_text_naive,
    encode_text_stream,
    throughput_probe,
)
from .errors import (
    ConfigError,
    CorpusError,
    DegenerateVectorError,
    DimensionMismatchError,
    HdlangError,
    ModelFormatError,
    TextTooShortError,
    TrainingError,
)
from .harness import (
    ConfusionMatrix,
    LabeledCorpus,
    accuracy_sweep,
    evaluate,
    ingest_corpus,
)
from .hv import Permutation, bind, bundle, cosine, new_permutation, new_random_label, permute
from .model import (
    LanguageModel,
    LanguageVector,
    build_model,
    load_model,
    save_model,
    train_language,
)

__version__ = "0.1.0"

import csv

import numpy as np
import pytest

from hdlang.classify import classify, query_next_symbol, similarity_matrix
from hdlang.encoder import EncoderConfig
from hdlang.errors import DimensionMismatchError, TextTooShortError
from hdlang.model import LanguageModel, LanguageVector, build_model

CFG = EncoderConfig(n=3, dim=1024, seed=21)

SAMPLES = {
    "eng": ["the cat sat on the mat and watched the birds outside",
            "this is a longer english sentence about nothing much at all"],
    "fra": ["le chat etait assis sur le tapis et regardait les oiseaux",
            "ceci est une phrase francaise un peu plus longue sur rien"],
    "fin": ["kissa istui matolla ja katseli lintuja ikkunan takana",
            "tama on pidempi suomenkielinen lause joka ei kerro mitaan"],
}


@pytest.fixture(scope="module")
def model():
    return build_model(list(SAMPLES.items()), CFG)


def test_training_sample_ranks_own_language_first(model):
    for lang, samples in SAMPLES.items():
        ranking = classify(samples[0], model)
        assert ranking.top[0] == lang
        assert ranking.top[1] > 0.3


def test_ranking_is_complete_and_sorted(model):
    ranking = classify("the cat sat", model)
    assert sorted(name for name, _ in ranking.entries) == sorted(model.names)
    scores = [s for _, s in ranking.entries]
    assert scores == sorted(scores, reverse=True)
    assert all(-1.0 <= s <= 1.0 for s in scores)


def test_too_short_text_propagates(model):
    with pytest.raises(TextTooShortError):
        classify("", model)


def test_tie_broken_alphabetically(model):
    twin = build_model(
        [("bbb", SAMPLES["eng"]), ("aaa", SAMPLES["eng"])], CFG
    )
    ranking = classify("the cat sat on the mat", twin)
    assert [name for name, _ in ranking.entries] == ["aaa", "bbb"]
    assert ranking.entries[0][1] == ranking.entries[1][1]


def test_scaling_language_vector_keeps_order(model):
    scaled = LanguageModel(
        model.basis,
        [
            LanguageVector(lv.name, lv.vector * 7, lv.sample_count, lv.byte_count)
            if lv.name == "fra"
            else lv
            for lv in model.languages
        ],
    )
    for text in ("the cat sat on the mat", "le chat etait assis sur le tapis"):
        a = [n for n, _ in classify(text, model).entries]
        b = [n for n, _ in classify(text, scaled).entries]
        assert a == b


def test_similarity_matrix_shape(model):
    sim = similarity_matrix(model)
    assert sim.names == tuple(model.names)
    assert np.array_equal(sim.values, sim.values.T)
    assert np.all(np.diag(sim.values) == 1.0)
    assert np.all((sim.values >= -1.0) & (sim.values <= 1.0))


def test_similarity_csv_round(model, tmp_path):
    sim = similarity_matrix(model)
    path = tmp_path / "sim.csv"
    sim.to_csv(path)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == list(model.names)
    values = np.array([[float(x) for x in row] for row in rows[1:]])
    assert np.array_equal(values, sim.values)  # repr round-trips exactly


def test_similarity_stable_after_reload(model, tmp_path):
    from hdlang.model import load_model, save_model

    path = tmp_path / "m.hdlm"
    save_model(model, path)
    before = similarity_matrix(model).values
    after = similarity_matrix(load_model(path)).values
    assert np.array_equal(before, after)


def test_query_ranks_all_symbols(model):
    ranking = query_next_symbol(model, "eng", "th")
    assert len(ranking.entries) == CFG.alphabet.size
    assert {name for name, _ in ranking.entries} == set(CFG.alphabet.symbols)


def test_query_plausible_continuation(model):
    # "the" dominates the English samples, so 'e' should follow "th"
    ranking = query_next_symbol(model, "eng", "th")
    assert ranking.top[0] == "e"


def test_query_unseen_context_scores_near_zero(model):
    ranking = query_next_symbol(model, "eng", "zq")
    assert all(abs(score) < 0.2 for _, score in ranking.entries)


def test_query_errors(model):
    with pytest.raises(KeyError):
        query_next_symbol(model, "deu", "th")
    with pytest.raises(DimensionMismatchError):
        query_next_symbol(model, "eng", "the")  # n-1 = 2 here
    with pytest.raises(DimensionMismatchError):
        query_next_symbol(model, "eng", "t7")

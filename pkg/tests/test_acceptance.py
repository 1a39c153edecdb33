"""Acceptance suite: one test per criterion, one PASS line per criterion.

Run with  pytest tests/test_acceptance.py -s  to see the PASS lines.
Criterion 6 (full-scale Europarl) needs user-supplied corpora via the
HDLANG_EUROPARL_TRAIN / HDLANG_EUROPARL_TEST environment variables and
is skipped otherwise.
"""

import os
import time
from pathlib import Path

import numpy as np
import pytest

from hdlang.alphabet import AlphabetConfig, normalize
from hdlang.classify import classify, query_next_symbol
from hdlang.encoder import (
    Basis,
    EncoderConfig,
    encode_ngram,
    encode_text_naive,
    encode_text_stream,
    throughput_probe,
)
from hdlang.errors import ModelFormatError
from hdlang.harness import corpus_to_training_sets, evaluate, ingest_corpus
from hdlang.hv import (
    bind,
    bundle,
    cosine,
    make_rng,
    new_permutation,
    new_random_label,
    permute,
)
from hdlang.model import build_model, load_model, save_model

D = 10_000
REPO = Path(__file__).resolve().parents[1]
DESK = REPO / "data" / "desk-corpus"

_model_cache: dict[int, object] = {}


def desk_model(n: int):
    if n not in _model_cache:
        corpus = ingest_corpus(DESK / "train")
        cfg = EncoderConfig(n=n, dim=D, seed=1)
        _model_cache[n] = build_model(corpus_to_training_sets(corpus), cfg)
    return _model_cache[n]


def ok(num: int, text: str) -> None:
    print(f"\nACCEPTANCE {num} PASS: {text}")


def test_criterion_1_algebra_suite():
    rng = make_rng(101)
    p = new_permutation(rng, D, 3)
    ones = np.ones(D, dtype=np.int8)
    discriminations = []
    for _ in range(100):
        a = new_random_label(rng, D)
        b = new_random_label(rng, D)
        c = new_random_label(rng, D)
        assert np.array_equal(bind(a, a), ones)
        assert np.array_equal(
            permute(bind(a, b), p, 1), bind(permute(a, p, 1), permute(b, p, 1))
        )
        assert np.array_equal(
            permute(bundle(a, b), p, 1),
            bundle(permute(a, p, 1), permute(b, p, 1)),
        )
        assert int(np.dot(a.astype(np.int64), b)) == int(
            np.dot(permute(a, p, 1).astype(np.int64), permute(b, p, 1))
        )
        assert cosine(a, a) == 1.0
        abc = bind(bind(permute(a, p, 2), permute(b, p, 1)), c)
        acb = bind(bind(permute(a, p, 2), permute(c, p, 1)), b)
        discriminations.append(abs(cosine(abc, acb)))
    assert max(discriminations) < 0.05
    ok(1, f"algebra suite over 100 triples, max |cos(ABC,ACB)| = "
          f"{max(discriminations):.4f} < 0.05")


def test_criterion_2_oracle_equivalence():
    rng = np.random.default_rng(202)
    bases = {n: Basis(EncoderConfig(n=n, dim=128, seed=77)) for n in range(1, 6)}
    checked = 0
    for i in range(1_000):
        n = int(rng.integers(1, 6))
        if i < 990:
            m = int(rng.integers(1, 301))
        elif i < 997:
            m = int(rng.integers(301, 2_001))
        else:
            m = int(rng.integers(2_001, 5_001))
        m = max(m, n - 2)
        symbols = rng.integers(0, 27, size=m).astype(np.int32)
        assert encode_text_stream(symbols, bases[n]) == encode_text_naive(
            symbols, bases[n]
        ), f"mismatch at n={n}, m={m}"
        checked += 1
    ok(2, f"streaming == naive bit-exactly on {checked} random (text, n) pairs")


def test_criterion_3_block_accounting():
    import hdlang.encoder as enc
    from hdlang.alphabet import render

    cfg = AlphabetConfig()
    for n in range(1, 6):
        b = Basis(EncoderConfig(n=n, dim=64, seed=3))
        for m in range(max(n - 2, 0), 40):
            symbols = (np.arange(m, dtype=np.int32) * 7) % 27
            # avoid double spaces / boundary spaces the normalizer would fix
            symbols[symbols == 26] = 0
            tv = encode_text_naive(symbols, b)
            assert tv.block_count == m - n + 3
    b4 = Basis(EncoderConfig(n=4, dim=64, seed=3))
    padded = enc._padded(normalize("a brook", cfg), b4)
    windows = [render(padded[i : i + 4].astype(np.int32), cfg)
               for i in range(len(padded) - 3)]
    assert windows == [" a b", "a br", " bro", "broo", "rook", "ook "]
    ok(3, "window count = m - n + 3 for all tested (m, n); "
          "'a brook' yields exactly the six expected tetragrams")


def test_criterion_4_near_orthogonality_statistics():
    rng = make_rng(404)
    pairs = 1_000
    cosines = np.empty(pairs)
    for i in range(pairs):
        cosines[i] = cosine(new_random_label(rng, D), new_random_label(rng, D))
    std = float(cosines.std(ddof=1))
    assert 0.008 <= std <= 0.012
    ok(4, f"cosine std over {pairs} label pairs = {std:.5f}, "
          f"inside [0.008, 0.012] (theory 0.01)")


def test_criterion_5_desk_scale_language_id():
    test_corpus = ingest_corpus(DESK / "test")
    assert len(test_corpus.languages) >= 5
    for lang, count in test_corpus.per_language_counts().items():
        assert count >= 200, f"{lang}: only {count} held-out sentences"
    acc = {}
    for n in (1, 2, 3, 4):
        acc[n] = evaluate(desk_model(n), test_corpus).accuracy
    assert acc[4] >= 0.90, f"tetragram accuracy {acc[4]:.4f} < 0.90"
    assert acc[1] < acc[2] < acc[3], f"trend violated: {acc}"
    ok(5, "desk corpus accuracy " +
       ", ".join(f"n={n}: {a:.3f}" for n, a in acc.items()) +
       " (tetragram >= 0.90 and n=1 < n=2 < n=3)")


FAMILIES = {
    "romance": {"es", "pt", "it", "fr", "ro", "spa", "por", "ita", "fra", "ron"},
    "germanic": {"de", "nl", "da", "sv", "en", "deu", "nld", "dan", "swe", "eng"},
    "slavic": {"pl", "cs", "sk", "sl", "bg", "pol", "ces", "slk", "slv", "bul"},
    "baltic": {"lt", "lv", "lit", "lav"},
    "uralic": {"fi", "et", "hu", "fin", "est", "hun"},
}

TABLE1 = {1: 74.9, 2: 94.0, 3: 97.3, 4: 97.8, 5: 97.3}


@pytest.mark.skipif(
    not (os.environ.get("HDLANG_EUROPARL_TRAIN")
         and os.environ.get("HDLANG_EUROPARL_TEST")),
    reason="full-scale corpora not supplied "
           "(set HDLANG_EUROPARL_TRAIN / HDLANG_EUROPARL_TEST)",
)
def test_criterion_6_full_scale_optional():
    from hdlang.harness import accuracy_sweep

    train = ingest_corpus(os.environ["HDLANG_EUROPARL_TRAIN"])
    test = ingest_corpus(os.environ["HDLANG_EUROPARL_TEST"])
    cfg = EncoderConfig(n=5, dim=D, seed=1)
    rows = accuracy_sweep(train, test, [1, 2, 3, 4, 5], cfg)
    for row in rows:
        expected = TABLE1[row.n]
        assert abs(100.0 * row.accuracy - expected) <= 1.5, (
            f"n={row.n}: {100 * row.accuracy:.1f}% vs expected {expected}%"
        )
    # errors should concentrate within language families (trigram model)
    cm = evaluate(desk_model_from(train, 3), test)
    family_of = {}
    for family, members in FAMILIES.items():
        for member in members:
            family_of[member] = family
    judged = hits = 0
    for i, name in enumerate(cm.names):
        off = cm.counts[i].copy()
        off[i] = 0
        if off.sum() == 0 or name not in family_of:
            continue
        judged += 1
        top_err = cm.names[int(off.argmax())]
        if family_of.get(top_err) == family_of[name]:
            hits += 1
    assert judged == 0 or hits / judged > 0.5
    ok(6, "Table-1 reproduction within ±1.5 points per n; "
          "off-diagonal mass concentrates within families")


def desk_model_from(train_corpus, n):
    cfg = EncoderConfig(n=n, dim=D, seed=1)
    return build_model(corpus_to_training_sets(train_corpus), cfg)


def _timed_encode(symbols, basis, repeats=3):
    encode_text_stream(symbols[:2000], basis)  # JIT warm-up
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        encode_text_stream(symbols, basis)
        best = min(best, time.perf_counter() - t0)
    return best


def test_criterion_7_throughput_and_scaling():
    rate = throughput_probe(300_000, EncoderConfig(n=4, dim=D, seed=1))
    assert rate >= 100_000, f"{rate:.0f} chars/s below the floor"

    rng = np.random.default_rng(707)
    symbols = rng.integers(0, 27, size=400_000).astype(np.int32)
    b4 = Basis(EncoderConfig(n=4, dim=D, seed=1))
    t_half = _timed_encode(symbols[:200_000], b4)
    t_full = _timed_encode(symbols, b4)
    ratio_m = t_full / t_half
    assert 1.5 <= ratio_m <= 2.5, f"doubling m scaled time by {ratio_m:.2f}"

    b2 = Basis(EncoderConfig(n=2, dim=D, seed=1))
    b5 = Basis(EncoderConfig(n=5, dim=D, seed=1))
    t2 = _timed_encode(symbols[:200_000], b2)
    t5 = _timed_encode(symbols[:200_000], b5)
    ratio_n = t5 / t2
    assert 0.75 <= ratio_n <= 1 / 0.75, f"n=5 vs n=2 time ratio {ratio_n:.2f}"
    ok(7, f"throughput {rate:.0f} chars/s >= 100000; time(2m)/time(m) = "
          f"{ratio_m:.2f}; time(n=5)/time(n=2) = {ratio_n:.2f}")


def test_criterion_8_persistence(tmp_path):
    model = desk_model(4)
    p1, p2 = tmp_path / "a.hdlm", tmp_path / "b.hdlm"
    save_model(model, p1)
    loaded = load_model(p1)
    save_model(loaded, p2)
    assert p1.read_bytes() == p2.read_bytes()

    test_corpus = ingest_corpus(DESK / "test")
    fixed = [s for _, s in test_corpus.samples[:100]]
    before = [classify(s, model).entries for s in fixed]
    after = [classify(s, loaded).entries for s in fixed]
    assert before == after

    data = bytearray(p1.read_bytes())
    data[len(data) // 2] ^= 0xFF
    p1.write_bytes(bytes(data))
    with pytest.raises(ModelFormatError) as err:
        load_model(p1)
    assert err.value.invariant  # a named invariant, not a bare crash
    ok(8, "save→load→save byte-identical; loaded model classifies 100 "
          "sentences identically; corruption rejected as "
          f"{err.value.invariant!r}")


def test_criterion_9_next_symbol_query():
    from scipy.stats import spearmanr

    model = desk_model(4)
    ranking = query_next_symbol(model, "eng", "the")
    assert ranking.top[0] == " ", f"top symbol {ranking.top[0]!r}, expected Space"

    # brute-force oracle: count tetragrams "the"+x in the padded training text
    cfg = model.config.alphabet
    ctx = [cfg.index_of[ch] for ch in "the"]
    counts = np.zeros(cfg.size, dtype=np.int64)
    text = (DESK / "train" / "eng.txt").read_text(encoding="utf-8")
    for line in text.splitlines():
        symbols = normalize(line, cfg)
        if len(symbols) + 2 < 4:
            continue
        padded = np.concatenate(
            ([cfg.space_index], symbols, [cfg.space_index])
        )
        for i in range(len(padded) - 3):
            if padded[i] == ctx[0] and padded[i + 1] == ctx[1] \
                    and padded[i + 2] == ctx[2]:
                counts[padded[i + 3]] += 1

    scores = dict(ranking.entries)
    frequent = [i for i in range(cfg.size) if counts[i] >= 10]
    assert len(frequent) >= 3
    rho = spearmanr(
        [counts[i] for i in frequent],
        [scores[cfg.symbols[i]] for i in frequent],
    ).statistic
    assert rho > 0.8, f"rank correlation {rho:.3f} <= 0.8"
    ok(9, f"query 'the' ranks Space first; rank correlation with "
          f"brute-force tetragram counts = {rho:.3f} over "
          f"{len(frequent)} symbols")

import csv
import io

import pytest

from hdlang.cli import main

EN = ["the cat sat on the mat watching the birds",
      "this sentence is written in plain english words",
      "a quick brown fox jumps over the lazy dog"] * 10
FR = ["le chat est assis sur le tapis du salon",
      "cette phrase est ecrite en francais tout simplement",
      "un renard brun saute par dessus le chien paresseux"] * 10


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory):
    root = tmp_path_factory.mktemp("corpus")
    (root / "en.txt").write_text("\n".join(EN) + "\n", encoding="utf-8")
    (root / "fr.txt").write_text("\n".join(FR) + "\n", encoding="utf-8")
    return root


@pytest.fixture(scope="module")
def model_path(corpus_dir, tmp_path_factory):
    path = tmp_path_factory.mktemp("model") / "m.hdlm"
    rc = main(["train", "--corpus", str(corpus_dir), "--n", "3",
               "--dim", "1024", "--seed", "5", "--model", str(path)])
    assert rc == 0
    return path


def test_train_lists_languages(corpus_dir, tmp_path, capsys):
    path = tmp_path / "m.hdlm"
    rc = main(["train", "--corpus", str(corpus_dir), "--n", "3",
               "--dim", "512", "--model", str(path)])
    out = capsys.readouterr().out
    assert rc == 0
    assert path.exists()
    assert "en\t" in out and "fr\t" in out


def test_train_odd_dim_is_usage_error(corpus_dir, tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["train", "--corpus", str(corpus_dir), "--dim", "10001",
              "--model", str(tmp_path / "m.hdlm")])
    assert err.value.code == 2


def test_train_deterministic_files(corpus_dir, tmp_path):
    paths = [tmp_path / "a.hdlm", tmp_path / "b.hdlm"]
    for p in paths:
        assert main(["train", "--corpus", str(corpus_dir), "--n", "3",
                     "--dim", "512", "--model", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_detect_stdin(model_path, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin",
                        io.StringIO("the cat sat on the mat\n"
                                    "le chat est assis sur le tapis\n"))
    rc = main(["detect", "--model", str(model_path)])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert out[0].split("\t")[0].startswith("en:")
    assert out[1].split("\t")[0].startswith("fr:")


def test_detect_top_1(model_path, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("the cat sat on the mat\n"))
    rc = main(["detect", "--model", str(model_path), "--top", "1"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert len(out.split("\t")) == 1


def test_detect_file_inputs(model_path, tmp_path, capsys):
    f = tmp_path / "text.txt"
    f.write_text("the cat sat on the mat\n", encoding="utf-8")
    rc = main(["detect", "--model", str(model_path), str(f)])
    assert rc == 0
    assert capsys.readouterr().out.startswith("en:")


def test_detect_empty_stdin(model_path, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    assert main(["detect", "--model", str(model_path)]) == 1


def test_detect_short_line_warns_and_continues(model_path, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin",
                        io.StringIO("?\nthe cat sat on the mat\n"))
    rc = main(["detect", "--model", str(model_path)])
    captured = capsys.readouterr()
    assert rc == 0
    assert "warning" in captured.err
    assert captured.out.count("\n") == 1


def test_eval_outputs(model_path, corpus_dir, tmp_path, capsys):
    out = tmp_path / "report"
    rc = main(["eval", "--model", str(model_path), "--test", str(corpus_dir),
               "--out", str(out)])
    assert rc == 0
    assert (out / "confusion.csv").exists()
    assert (out / "confusion.txt").exists()
    assert (out / "confusion.png").exists()
    assert "accuracy: 1.0000" in capsys.readouterr().out


def test_sweep_outputs(corpus_dir, tmp_path):
    out = tmp_path / "sweep"
    rc = main(["sweep", "--train", str(corpus_dir), "--test", str(corpus_dir),
               "--n-list", "2,3", "--dim", "512", "--out", str(out)])
    assert rc == 0
    with open(out / "sweep.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["n", "accuracy", "classified", "skipped"]
    assert [r[0] for r in rows[1:]] == ["2", "3"]
    assert (out / "sweep.png").exists()


def test_similarity_csv_diagonal(model_path, tmp_path):
    out = tmp_path / "sim.csv"
    rc = main(["similarity", "--model", str(model_path), "--out", str(out)])
    assert rc == 0
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))
    names = rows[0]
    for i, row in enumerate(rows[1:]):
        assert float(row[i]) == 1.0
    assert out.with_suffix(".png").exists()
    assert names == ["en", "fr"]


def test_query_output(model_path, capsys):
    rc = main(["query", "--model", str(model_path), "--lang", "en",
               "--context", "th"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.splitlines()[0].split("\t")[0] == "e"


def test_query_unknown_language(model_path, capsys):
    assert main(["query", "--model", str(model_path), "--lang", "xx",
                 "--context", "th"]) == 1


def test_query_bad_context_length(model_path, capsys):
    assert main(["query", "--model", str(model_path), "--lang", "en",
                 "--context", "the"]) == 1
    assert "n-1" in capsys.readouterr().err


def test_bench_small(capsys):
    rc = main(["bench", "--dim", "512", "--n", "3", "--chars", "20000"])
    assert rc == 0
    assert "chars/s" in capsys.readouterr().out


def test_env_variable_default(corpus_dir, tmp_path, monkeypatch):
    # env fills the default; an explicit flag still wins
    monkeypatch.setenv("HDLANG_DIM", "512")
    path = tmp_path / "m.hdlm"
    assert main(["train", "--corpus", str(corpus_dir), "--n", "3",
                 "--model", str(path)]) == 0
    from hdlang.model import load_model
    assert load_model(path).config.dim == 512
    path2 = tmp_path / "m2.hdlm"
    assert main(["train", "--corpus", str(corpus_dir), "--n", "3",
                 "--dim", "256", "--model", str(path2)]) == 0
    assert load_model(path2).config.dim == 256

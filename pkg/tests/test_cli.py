import random

import pytest

from conftest import T1_TEXT
from trigram_tagger import __version__, deserialize_model, parse_tagged_corpus
from trigram_tagger.cli import main
from trigram_tagger.corpus import BOS


@pytest.fixture
def t1_file(tmp_path):
    path = tmp_path / "t1.tsv"
    path.write_text(T1_TEXT, encoding="utf-8")
    return path


@pytest.fixture
def t1_model_file(tmp_path, t1_file):
    model = tmp_path / "t1.model"
    assert main(["train", "--corpus", str(t1_file), "--model", str(model),
                 "--smoothing", "none"]) == 0
    return model


def test_train_writes_probe_able_model(t1_model_file, capsys):
    model = deserialize_model(t1_model_file.read_bytes())
    assert model.transition_prob(BOS, BOS, "NN") == pytest.approx(2 / 3)


def test_train_prints_stats_and_lambdas(tmp_path, t1_file, capsys):
    assert main(["train", "--corpus", str(t1_file), "--model", str(tmp_path / "m")]) == 0
    out = capsys.readouterr().out
    assert "sentences: 3" in out and "tokens: 6" in out and "vocabulary: 3" in out
    assert "lambdas: 0.111111,0.111111,0.777778" in out


def test_train_is_deterministic(tmp_path, t1_file):
    for name in ("a", "b"):
        assert main(["train", "--corpus", str(t1_file), "--model", str(tmp_path / name)]) == 0
    assert (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()


def test_train_empty_file(tmp_path):
    empty = tmp_path / "empty.tsv"
    empty.write_text("", encoding="utf-8")
    assert main(["train", "--corpus", str(empty), "--model", str(tmp_path / "m")]) == 3
    assert not (tmp_path / "m").exists()


def test_train_missing_corpus(tmp_path):
    assert main(["train", "--corpus", str(tmp_path / "nope"), "--model", str(tmp_path / "m")]) == 2


def test_train_bad_tag(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("घर\tFOO\n", encoding="utf-8")
    assert main(["train", "--corpus", str(bad), "--model", str(tmp_path / "m")]) == 3


@pytest.mark.parametrize("argv", [
    ["train", "--corpus", "c", "--model", "m", "--k", "0.5"],
    ["train", "--corpus", "c", "--model", "m", "--smoothing", "none", "--lambdas", "0.2,0.3,0.5"],
    ["train", "--corpus", "c", "--model", "m", "--lambdas", "0.5,0.5,0.5"],
    ["train", "--corpus", "c", "--model", "m", "--order", "4"],
    ["train", "--corpus", "c"],
    ["tag"],
    ["split", "--corpus", "c", "--out", "o", "--ratio", "1.5"],
])
def test_usage_errors_exit_1_before_io(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(SystemExit) as info:
        rc = main(argv)
        raise SystemExit(rc)
    assert info.value.code == 1


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_tag_raw_text(tmp_path, t1_model_file):
    inp = tmp_path / "in.txt"
    inp.write_text("w1 w2", encoding="utf-8")
    out = tmp_path / "out.tsv"
    assert main(["tag", "--model", str(t1_model_file), "--in", str(inp), "--out", str(out),
                 "--raw"]) == 0
    assert out.read_bytes() == b"w1\tNN\nw2\tVM\n"


def test_tag_pretokenized_preserves_sentences(tmp_path, t1_model_file):
    inp = tmp_path / "in.txt"
    inp.write_text("w1\nw2\n\nw3\n", encoding="utf-8")
    out = tmp_path / "out.tsv"
    assert main(["tag", "--model", str(t1_model_file), "--in", str(inp), "--out", str(out)]) == 0
    text = out.read_text(encoding="utf-8")
    assert text == "w1\tNN\nw2\tVM\n\nw3\tVM\n"
    assert len(parse_tagged_corpus(text)) == 2


def test_tag_oov_gets_open_class(tmp_path, t1_model_file):
    inp = tmp_path / "in.txt"
    inp.write_text("नवीन शब्द", encoding="utf-8")
    out = tmp_path / "out.tsv"
    assert main(["tag", "--model", str(t1_model_file), "--in", str(inp), "--out", str(out),
                 "--raw"]) == 0
    tags = [line.split("\t")[1] for line in out.read_text(encoding="utf-8").splitlines()]
    assert tags and set(tags) <= {"NN", "NNP", "VM", "JJ", "RB", "UNK"}


def test_tag_empty_input(tmp_path, t1_model_file):
    inp = tmp_path / "in.txt"
    inp.write_text("", encoding="utf-8")
    out = tmp_path / "out.tsv"
    assert main(["tag", "--model", str(t1_model_file), "--in", str(inp), "--out", str(out)]) == 0
    assert out.read_bytes() == b""


def test_tag_twice_identical(tmp_path, t1_model_file):
    inp = tmp_path / "in.txt"
    inp.write_text("w1 w2 w3 ।\nw2 w9", encoding="utf-8")
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        assert main(["tag", "--model", str(t1_model_file), "--in", str(inp), "--out", str(out),
                     "--raw"]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_tag_with_oracle_cap(tmp_path, t1_model_file):
    inp = tmp_path / "in.txt"
    inp.write_text("w1 w2", encoding="utf-8")
    out = tmp_path / "out.tsv"
    assert main(["tag", "--model", str(t1_model_file), "--in", str(inp), "--out", str(out),
                 "--raw", "--cap", "6"]) == 0
    assert out.read_bytes() == b"w1\tNN\nw2\tVM\n"
    inp.write_text("w1 w2 w1 w2 w1 w2 w1", encoding="utf-8")
    assert main(["tag", "--model", str(t1_model_file), "--in", str(inp), "--out", str(out),
                 "--raw", "--cap", "6"]) == 3


@pytest.mark.parametrize("damage", [
    lambda b: b.replace(b"model\t1", b"model\t9"),
    lambda b: b[:40],
    lambda b: b.replace(b"w2\tVM\t2", b"w2\tVM\t5"),
])
def test_tag_bad_model_exit_4(tmp_path, t1_model_file, damage):
    bad = tmp_path / "bad.model"
    bad.write_bytes(damage(t1_model_file.read_bytes()))
    inp = tmp_path / "in.txt"
    inp.write_text("w1", encoding="utf-8")
    assert main(["tag", "--model", str(bad), "--in", str(inp), "--out", str(tmp_path / "o")]) == 4


def test_eval_identity(tmp_path, t1_file, capsys):
    assert main(["eval", "--gold", str(t1_file), "--in", str(t1_file)]) == 0
    assert "Accuracy:  100.00%" in capsys.readouterr().out


def test_eval_reported_figures(tmp_path, capsys):
    gold, pred = _figures_pair(tmp_path)
    report = tmp_path / "report.txt"
    assert main(["eval", "--gold", str(gold), "--in", str(pred), "--out", str(report)]) == 0
    assert "Accuracy:  91.63%" in capsys.readouterr().out
    assert "accuracy_percent=91.63\n" in report.read_text(encoding="utf-8")


def _figures_pair(tmp_path, total=48635, correct=44563):
    rng = random.Random(0)
    wrong = set(rng.sample(range(total), total - correct))
    gold_lines, pred_lines = [], []
    for i in range(total):
        gold_lines.append(f"t{i}\tNN\n")
        pred_lines.append(f"t{i}\t{'VM' if i in wrong else 'NN'}\n")
        if i % 25 == 24:
            gold_lines.append("\n")
            pred_lines.append("\n")
    gold = tmp_path / "gold.tsv"
    pred = tmp_path / "pred.tsv"
    gold.write_text("".join(gold_lines), encoding="utf-8")
    pred.write_text("".join(pred_lines), encoding="utf-8")
    return gold, pred


def test_eval_misaligned(tmp_path, t1_file, capsys):
    other = tmp_path / "other.tsv"
    other.write_text("w1\tNN\nw2\tVM\n", encoding="utf-8")
    assert main(["eval", "--gold", str(t1_file), "--in", str(other)]) == 5
    assert "alignment" in capsys.readouterr().err


def test_eval_low_accuracy_still_exits_zero(tmp_path, t1_file):
    wrong = tmp_path / "wrong.tsv"
    wrong.write_text(T1_TEXT.replace("\tNN", "\tPSP").replace("\tVM", "\tPSP")
                     .replace("\tJJ", "\tPSP"), encoding="utf-8")
    assert main(["eval", "--gold", str(t1_file), "--in", str(wrong)]) == 0


def test_split(tmp_path, t1_file):
    prefix = tmp_path / "parts"
    assert main(["split", "--corpus", str(t1_file), "--out", str(prefix), "--ratio", "0.67",
                 "--seed", "1"]) == 0
    train = parse_tagged_corpus((tmp_path / "parts.train.tsv").read_text(encoding="utf-8"))
    test = parse_tagged_corpus((tmp_path / "parts.test.tsv").read_text(encoding="utf-8"))
    assert len(train) == 2 and len(test) == 1


def test_custom_tagset_flag(tmp_path):
    corpus = tmp_path / "c.tsv"
    corpus.write_text("x\tA\ny\tB\n", encoding="utf-8")
    model = tmp_path / "m"
    assert main(["train", "--corpus", str(corpus), "--model", str(model), "--tagset", "A,B"]) == 0
    assert main(["train", "--corpus", str(corpus), "--model", str(model)]) == 3

"""Command line front end: ``train``, ``tag``, ``eval`` and ``split``.

Exit codes: 0 ok, 1 usage, 2 I/O, 3 parse/format, 4 model load, 5 alignment.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .corpus import (
    Tagset,
    parse_raw_text,
    parse_tagged_corpus,
    parse_tokenized_text,
    train_test_split_corpus,
    validate_corpus,
    write_tagged_corpus,
)
from .evaluation import dump_report, evaluate, format_report
from .exceptions import (
    AlignmentError,
    CorpusError,
    DegenerateCountsError,
    DomainError,
    ModelLoadError,
)
from .model import deserialize_model, serialize_model
from .tagger import TrigramTagger

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_FORMAT = 3
EXIT_MODEL = 4
EXIT_ALIGNMENT = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _lambdas(value):
    try:
        parts = tuple(float(x) for x in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad lambdas {value!r}") from None
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("--lambdas takes three comma-separated numbers")
    return parts


def _positive_int(value):
    n = int(value)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trigram-tagger", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    train = sub.add_parser("train", help="train a model from a tagged corpus")
    train.add_argument("--corpus", required=True)
    train.add_argument("--model", required=True, help="output model file")
    train.add_argument("--order", type=int, choices=(1, 2, 3), default=3)
    train.add_argument("--smoothing", choices=("none", "addk", "interp"), default="interp")
    train.add_argument("--k", type=float)
    train.add_argument("--lambdas", type=_lambdas, help="unigram,bigram,trigram weights")
    train.add_argument("--oov", choices=("uniform", "singleton"), default="uniform")
    train.add_argument("--tagset", help="comma-separated tag labels (default: IL tagset)")

    tag = sub.add_parser("tag", help="tag raw or pre-tokenized text")
    tag.add_argument("--model", required=True)
    tag.add_argument("--in", dest="input", help="input file (default: stdin)")
    tag.add_argument("--out", help="output file (default: stdout)")
    tag.add_argument("--raw", action="store_true", help="input is running text")
    tag.add_argument("--cap", type=_positive_int,
                     help="decode exhaustively (oracle) for sentences up to this length")
    tag.add_argument("--beam", type=_positive_int, help="Viterbi beam width")

    ev = sub.add_parser("eval", help="score predicted tags against gold")
    ev.add_argument("--gold", required=True)
    ev.add_argument("--in", dest="input", required=True, help="predicted tagged corpus")
    ev.add_argument("--out", help="write a machine-readable report here")
    ev.add_argument("--tagset")

    split = sub.add_parser("split", help="seeded train/test split of a tagged corpus")
    split.add_argument("--corpus", required=True)
    split.add_argument("--out", required=True,
                       help="output prefix; writes PREFIX.train.tsv and PREFIX.test.tsv")
    split.add_argument("--ratio", type=float, default=0.8)
    split.add_argument("--seed", type=int, default=0)
    split.add_argument("--tagset")
    return parser


def _check_flags(args):
    if args.command == "train":
        if args.k is not None and args.smoothing != "addk":
            raise UsageError("--k only applies to --smoothing addk")
        if args.k is not None and not args.k > 0:
            raise UsageError("--k must be positive")
        if args.lambdas is not None:
            if args.smoothing != "interp":
                raise UsageError("--lambdas only applies to --smoothing interp")
            if min(args.lambdas) < 0 or abs(sum(args.lambdas) - 1.0) > 1e-9:
                raise UsageError("--lambdas must be non-negative and sum to 1")
    if args.command == "split" and not 0.0 < args.ratio < 1.0:
        raise UsageError("--ratio must lie strictly between 0 and 1")
    if getattr(args, "tagset", None) is not None:
        try:
            Tagset(args.tagset.split(","))
        except ValueError as exc:
            raise UsageError(f"--tagset: {exc}") from None


def _tagset(args) -> Tagset:
    if getattr(args, "tagset", None):
        return Tagset(args.tagset.split(","))
    return Tagset.default()


def _read_text(path):
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8", newline="") as fh:
        return fh.read()


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def run_train(args) -> int:
    corpus = parse_tagged_corpus(_read_text(args.corpus), _tagset(args))
    report = validate_corpus(corpus)
    estimator = TrigramTagger(
        order=args.order, smoothing=args.smoothing,
        k=args.k if args.k is not None else 1.0,
        lambdas=args.lambdas, oov=args.oov, tagset=corpus.tagset,
    ).fit(corpus)
    with open(args.model, "wb") as fh:
        fh.write(serialize_model(estimator.model_))
    print(f"sentences: {report.n_sentences}")
    print(f"tokens: {report.n_tokens}")
    print(f"vocabulary: {report.vocabulary_size}")
    if estimator.model_.smoothing.mode == "interpolation":
        l1, l2, l3 = estimator.lambdas_
        print(f"lambdas: {l1:.6f},{l2:.6f},{l3:.6f}")
    return EXIT_OK


def _load_model(path):
    with open(path, "rb") as fh:
        data = fh.read()
    return deserialize_model(data)


def run_tag(args) -> int:
    model = _load_model(args.model)
    text = _read_text(args.input)
    sentences = parse_raw_text(text) if args.raw else parse_tokenized_text(text)
    tagger = TrigramTagger.from_model(model, beam_width=args.beam, cap=args.cap)
    tagged = [r.tagged for r in tagger.decode(sentences)] if sentences else []
    _write_text(args.out, write_tagged_corpus(tagged))
    return EXIT_OK


def run_eval(args) -> int:
    tagset = _tagset(args)
    gold = parse_tagged_corpus(_read_text(args.gold), tagset)
    predicted = parse_tagged_corpus(_read_text(args.input), tagset)
    report = evaluate(gold, predicted)
    sys.stdout.write(format_report(report))
    if args.out:
        _write_text(args.out, dump_report(report))
    return EXIT_OK


def run_split(args) -> int:
    corpus = parse_tagged_corpus(_read_text(args.corpus), _tagset(args))
    train, test = train_test_split_corpus(corpus, args.ratio, args.seed)
    _write_text(f"{args.out}.train.tsv", write_tagged_corpus(train))
    _write_text(f"{args.out}.test.tsv", write_tagged_corpus(test))
    print(f"train: {len(train)} sentences, test: {len(test)} sentences")
    return EXIT_OK


COMMANDS = {"train": run_train, "tag": run_tag, "eval": run_eval, "split": run_split}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_flags(args)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModelLoadError as exc:
        print(f"error: cannot load model: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except AlignmentError as exc:
        print(f"error: alignment: {exc}", file=sys.stderr)
        return EXIT_ALIGNMENT
    except (CorpusError, DegenerateCountsError, DomainError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

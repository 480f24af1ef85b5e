"""Tag n-gram counts and the smoothed trigram probability model.

Each sentence is padded as ``BOS BOS t1 ... tn EOS`` before counting, so the
trigram estimate ``f(t2, t1, t) / f(t2, t1)`` is defined at every position,
including the sentence end.
"""

from __future__ import annotations

import zlib
from collections import Counter
from dataclasses import dataclass, field, replace

import numpy as np

from .corpus import BOS, EOS, TaggedCorpus, Tagset, normalize_token
from .exceptions import (
    ChecksumError,
    DegenerateCountsError,
    DomainError,
    EmptyCorpusError,
    ModelLoadError,
    TruncatedModelError,
    VersionMismatchError,
)

FORMAT_VERSION = 1
MAGIC = "#trigram-tagger-model"

SMOOTHING_MODES = ("none", "add-k", "interpolation")
OOV_MODES = ("uniform-open-class", "singleton-tag-distribution")
DEFAULT_OPEN_CLASS = ("NN", "NNP", "VM", "JJ", "RB", "UNK")


@dataclass
class CountsTable:
    """Raw frequencies collected from a padded corpus.

    ``uni`` only holds real tags; boundary events live in ``bi`` and ``tri``.
    Tables collected independently can be merged with ``+``.
    """

    tagset: Tagset
    uni: Counter = field(default_factory=Counter)
    bi: Counter = field(default_factory=Counter)
    tri: Counter = field(default_factory=Counter)
    emit: Counter = field(default_factory=Counter)

    @property
    def tokens_total(self) -> int:
        return sum(self.uni.values())

    @property
    def n_sentences(self) -> int:
        return self.bi[(BOS, BOS)]

    def __add__(self, other: "CountsTable") -> "CountsTable":
        if self.tagset != other.tagset:
            raise ValueError("cannot merge counts over different tagsets")
        return CountsTable(
            self.tagset,
            self.uni + other.uni,
            self.bi + other.bi,
            self.tri + other.tri,
            self.emit + other.emit,
        )

    merge = __add__

    def is_empty(self) -> bool:
        return not self.uni


def collect_counts(corpus: TaggedCorpus) -> CountsTable:
    if not corpus.sentences:
        raise EmptyCorpusError("cannot collect counts from an empty corpus")
    counts = CountsTable(corpus.tagset)
    for sent in corpus.sentences:
        if not sent:
            continue
        padded = [BOS, BOS] + [tok.tag for tok in sent] + [EOS]
        for word, tag in sent:
            counts.uni[tag] += 1
            counts.emit[(word, tag)] += 1
        for a, b in zip(padded, padded[1:]):
            counts.bi[(a, b)] += 1
        for a, b, c in zip(padded, padded[1:], padded[2:]):
            counts.tri[(a, b, c)] += 1
    if counts.is_empty():
        raise EmptyCorpusError("cannot collect counts from an empty corpus")
    return counts


def _ratio(num, den):
    return num / den if den > 0 else 0.0


def _depleted(num, den):
    return (num - 1) / (den - 1) if den > 1 else 0.0


def _bigram_context(counts: CountsTable, tag: str) -> int:
    # BOS->BOS pairs never precede a predicted tag, so BOS as a bigram
    # context counts sentence starts only.
    if tag == BOS:
        return counts.n_sentences
    return counts.uni[tag]


def _unigram_target(counts: CountsTable, tag: str) -> int:
    return counts.n_sentences if tag == EOS else counts.uni[tag]


def estimate_interpolation_weights(counts: CountsTable) -> tuple[float, float, float]:
    """Deleted-interpolation weights ``(l1, l2, l3)`` for unigram/bigram/trigram.

    Each observed trigram votes its count for the order whose estimate,
    recomputed with that trigram's own occurrence removed, is highest. Ties
    go to the higher order.
    """
    votes = [0, 0, 0]
    n_targets = counts.tokens_total + counts.n_sentences
    for (a, b, c), n in sorted(counts.tri.items()):
        if n <= 0:
            continue
        scores = (
            _depleted(_unigram_target(counts, c), n_targets),
            _depleted(counts.bi[(b, c)], _bigram_context(counts, b)),
            _depleted(n, counts.bi[(a, b)]),
        )
        best = max(range(3), key=lambda i: (scores[i], i))
        votes[best] += n
    total = sum(votes)
    if total == 0:
        raise DegenerateCountsError("no trigram evidence to estimate interpolation weights")
    return tuple(v / total for v in votes)


@dataclass(frozen=True)
class SmoothingConfig:
    mode: str = "interpolation"
    k: float = 1.0
    lambdas: tuple | None = None
    oov_mode: str = "uniform-open-class"

    def __post_init__(self):
        if self.mode not in SMOOTHING_MODES:
            raise ValueError(f"unknown smoothing mode {self.mode!r}")
        if self.oov_mode not in OOV_MODES:
            raise ValueError(f"unknown OOV mode {self.oov_mode!r}")
        if not self.k > 0:
            raise ValueError("k must be positive")
        if self.lambdas is not None:
            lambdas = tuple(float(x) for x in self.lambdas)
            if len(lambdas) != 3 or min(lambdas) < 0 or abs(sum(lambdas) - 1.0) > 1e-9:
                raise ValueError("lambdas must be three non-negative weights summing to 1")
            object.__setattr__(self, "lambdas", lambdas)


class TagModel:
    """Finalized emission and transition estimators.

    Build instances with :func:`finalize`. Probabilities are returned on the
    linear scale; the decoder reads the log tables built here.
    """

    def __init__(self, counts: CountsTable, smoothing: SmoothingConfig, order: int,
                 open_class=None):
        if order not in (1, 2, 3):
            raise ValueError("order must be 1, 2 or 3")
        tagset = counts.tagset
        if open_class is None:
            open_class = [t for t in DEFAULT_OPEN_CLASS if t in tagset] or list(tagset)
        open_class = [t for t in tagset if t in set(open_class)]
        if not open_class:
            raise ValueError("open_class must contain at least one tagset label")
        self._counts = counts
        self._smoothing = smoothing
        self._order = order
        self._open_class = tuple(open_class)
        self._vocabulary = frozenset(w for w, _ in counts.emit)
        word_totals = Counter()
        for (w, _), n in counts.emit.items():
            word_totals[w] += n
        singles = Counter(t for (w, t), n in counts.emit.items() if word_totals[w] == 1 and n == 1)
        self._singleton_tags = singles
        self._n_singletons = sum(singles.values())
        self._log_transitions = self._build_log_transitions()
        self._oov_log_emissions = None

    counts = property(lambda self: self._counts)
    smoothing = property(lambda self: self._smoothing)
    order = property(lambda self: self._order)
    open_class = property(lambda self: self._open_class)
    vocabulary = property(lambda self: self._vocabulary)

    @property
    def tagset(self) -> Tagset:
        return self._counts.tagset

    @property
    def lambdas(self):
        return self._smoothing.lambdas

    def __repr__(self):
        return (f"TagModel(order={self._order}, smoothing={self._smoothing.mode!r}, "
                f"tags={len(self.tagset)}, vocabulary={len(self._vocabulary)})")

    # -- transitions -------------------------------------------------------

    def _check_transition_args(self, t2, t1, t):
        tagset = self.tagset
        for ctx in (t2, t1):
            if ctx != BOS and ctx not in tagset:
                raise DomainError(f"unknown context tag {ctx!r}")
        if t != EOS and t not in tagset:
            raise DomainError(f"unknown target tag {t!r}")

    def _mle(self, t2, t1, t):
        c = self._counts
        mle3 = _ratio(c.tri[(t2, t1, t)], c.bi[(t2, t1)])
        mle2 = _ratio(c.bi[(t1, t)], _bigram_context(c, t1))
        mle1 = _ratio(_unigram_target(c, t), c.tokens_total + c.n_sentences)
        return mle1, mle2, mle3

    def transition_prob(self, t2: str, t1: str, t: str) -> float:
        """P(t | t2, t1) under the model's order and smoothing."""
        self._check_transition_args(t2, t1, t)
        return self._transition_prob(t2, t1, t)

    def _transition_prob(self, t2, t1, t):
        c = self._counts
        mode = self._smoothing.mode
        order = self._order
        if mode == "add-k":
            k = self._smoothing.k
            V = len(self.tagset) + 1
            if order == 3:
                num, den = c.tri[(t2, t1, t)], c.bi[(t2, t1)]
            elif order == 2:
                num, den = c.bi[(t1, t)], _bigram_context(c, t1)
            else:
                num, den = _unigram_target(c, t), c.tokens_total + c.n_sentences
            return (num + k) / (den + k * V)
        mle1, mle2, mle3 = self._mle(t2, t1, t)
        if mode == "none":
            return (mle1, mle2, mle3)[order - 1]
        l1, l2, l3 = self._smoothing.lambdas
        if order == 3:
            return l3 * mle3 + l2 * mle2 + l1 * mle1
        if order == 2:
            return (l2 + l3) * mle2 + l1 * mle1
        return mle1

    def _build_log_transitions(self):
        # axes: (t2, t1, t); contexts index BOS as len(tags), targets index EOS as len(tags)
        tags = list(self.tagset.tags)
        ctx = tags + [BOS]
        tgt = tags + [EOS]
        table = np.empty((len(ctx), len(ctx), len(tgt)))
        for i, a in enumerate(ctx):
            for j, b in enumerate(ctx):
                for m, t in enumerate(tgt):
                    table[i, j, m] = self._transition_prob(a, b, t)
        with np.errstate(divide="ignore"):
            table = np.log(table)
        table.setflags(write=False)
        return table

    @property
    def log_transitions(self) -> np.ndarray:
        """Read-only ``(T+1, T+1, T+1)`` array of log transition probabilities."""
        return self._log_transitions

    # -- emissions ---------------------------------------------------------

    def emission_prob(self, word: str, tag: str) -> float:
        """P(word | tag); out-of-vocabulary words use the configured OOV estimator."""
        if tag not in self.tagset:
            raise DomainError(f"unknown tag {tag!r}")
        word = normalize_token(word)
        return self._emission_prob(word, tag)

    def _emission_prob(self, word, tag):
        if word in self._vocabulary:
            return _ratio(self._counts.emit[(word, tag)], self._counts.uni[tag])
        if self._smoothing.oov_mode == "singleton-tag-distribution" and self._n_singletons:
            return self._singleton_tags[tag] / self._n_singletons
        return 1.0 / len(self._open_class) if tag in self._open_class else 0.0

    def log_emissions(self, word: str) -> np.ndarray:
        """Log P(word | tag) for every tag, in tagset order."""
        word = normalize_token(word)
        if word not in self._vocabulary and self._oov_log_emissions is not None:
            return self._oov_log_emissions
        probs = np.array([self._emission_prob(word, t) for t in self.tagset.tags])
        with np.errstate(divide="ignore"):
            logs = np.log(probs)
        logs.setflags(write=False)
        if word not in self._vocabulary:
            self._oov_log_emissions = logs
        return logs

    def is_known(self, word: str) -> bool:
        return normalize_token(word) in self._vocabulary


def finalize(counts: CountsTable, smoothing: SmoothingConfig | None = None, order: int = 3,
             open_class=None) -> TagModel:
    """Freeze ``counts`` into a :class:`TagModel`.

    Under interpolation with no explicit lambdas the weights are estimated by
    deleted interpolation (and may raise ``DegenerateCountsError``).
    """
    smoothing = smoothing or SmoothingConfig()
    if smoothing.mode == "interpolation" and smoothing.lambdas is None:
        smoothing = replace(smoothing, lambdas=estimate_interpolation_weights(counts))
    return TagModel(counts, smoothing, order, open_class=open_class)


# -- serialization -----------------------------------------------------------

def _fmt_float(x: float) -> str:
    return repr(float(x))


def serialize_model(model: TagModel) -> bytes:
    """Deterministic, versioned text encoding of a model (UTF-8 bytes)."""
    s = model.smoothing
    c = model.counts
    lines = [
        f"{MAGIC}\t{FORMAT_VERSION}",
        f"order\t{model.order}",
        f"smoothing\t{s.mode}",
        f"k\t{_fmt_float(s.k)}",
        "lambdas\t" + ("-" if s.lambdas is None else ",".join(_fmt_float(x) for x in s.lambdas)),
        f"oov\t{s.oov_mode}",
        "tagset\t" + " ".join(model.tagset.tags),
        "open_class\t" + " ".join(model.open_class),
    ]
    sections = (
        ("uni", c.uni),
        ("bi", c.bi),
        ("tri", c.tri),
        ("emit", c.emit),
    )
    for name, table in sections:
        items = sorted((k if isinstance(k, tuple) else (k,), v) for k, v in table.items() if v)
        lines.append(f"[{name}]\t{len(items)}")
        lines.extend("\t".join(key) + f"\t{v}" for key, v in items)
    body = "".join(line + "\n" for line in lines).encode("utf-8")
    return body + f"checksum\t{zlib.crc32(body)}\n".encode("ascii")


def _section(lines, pos, name, width):
    if pos >= len(lines):
        raise TruncatedModelError(f"missing [{name}] section")
    head, _, size = lines[pos].partition("\t")
    if head != f"[{name}]":
        raise ModelLoadError(f"expected [{name}] section, found {lines[pos]!r}")
    n = int(size)
    table = Counter()
    rows = lines[pos + 1:pos + 1 + n]
    if len(rows) != n:
        raise TruncatedModelError(f"[{name}] section is truncated")
    for row in rows:
        fields = row.split("\t")
        if len(fields) != width + 1:
            raise ModelLoadError(f"malformed [{name}] row {row!r}")
        key = fields[0] if width == 1 else tuple(fields[:width])
        table[key] = int(fields[-1])
    return table, pos + 1 + n


def deserialize_model(data: bytes) -> TagModel:
    """Inverse of :func:`serialize_model`.

    Raises ``VersionMismatchError``, ``TruncatedModelError`` or
    ``ChecksumError`` (all ``ModelLoadError``) on bad input.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ModelLoadError(f"model is not valid UTF-8: {exc}") from None
    first, _, _ = text.partition("\n")
    magic, _, version = first.partition("\t")
    if magic != MAGIC:
        raise ModelLoadError("not a trigram-tagger model file")
    if version != str(FORMAT_VERSION):
        raise VersionMismatchError(f"model format version {version!r}, expected {FORMAT_VERSION}")

    idx = text.rfind("checksum\t")
    if idx == -1 or not text.endswith("\n") or "\n" in text[idx:-1]:
        raise TruncatedModelError("model file has no trailing checksum line")
    body = data[:len(text[:idx].encode("utf-8"))]
    try:
        stored = int(text[idx + len("checksum\t"):-1])
    except ValueError:
        raise ChecksumError("unreadable checksum line") from None
    if zlib.crc32(body) != stored:
        raise ChecksumError("model checksum does not match its contents")

    lines = text[:idx].split("\n")[:-1]
    try:
        header = {}
        for line in lines[1:8]:
            key, _, value = line.partition("\t")
            header[key] = value
        lambdas = None if header["lambdas"] == "-" else tuple(
            float(x) for x in header["lambdas"].split(","))
        smoothing = SmoothingConfig(
            mode=header["smoothing"], k=float(header["k"]), lambdas=lambdas,
            oov_mode=header["oov"])
        tagset = Tagset(header["tagset"].split(" "))
        open_class = header["open_class"].split(" ")
        order = int(header["order"])
        pos = 8
        uni, pos = _section(lines, pos, "uni", 1)
        bi, pos = _section(lines, pos, "bi", 2)
        tri, pos = _section(lines, pos, "tri", 3)
        emit, pos = _section(lines, pos, "emit", 2)
        if pos != len(lines):
            raise ModelLoadError("unexpected data after the [emit] section")
    except (KeyError, ValueError, IndexError) as exc:
        raise ModelLoadError(f"malformed model header or body: {exc}") from None
    counts = CountsTable(tagset, uni, bi, tri, emit)
    return TagModel(counts, smoothing, order, open_class=open_class)


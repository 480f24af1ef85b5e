"""Tagsets, tagged corpora and their column file format.

A tagged corpus file holds one ``surface<TAB>tag`` pair per line and an empty
line between sentences. Lines starting with ``#`` that precede the first
sentence are comments.
"""

from __future__ import annotations

import random
import re
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .exceptions import (
    CorpusParseError,
    DomainError,
    EmptyCorpusError,
    TagsetViolationError,
)

BOS = "<BOS>"
EOS = "<EOS>"

# IL tagset, in table order.
DEFAULT_TAGS = (
    ("NN", "Common noun"),
    ("NST", "Noun denoting spatial and temporal expressions"),
    ("NNP", "Proper noun"),
    ("PRP", "Pronoun"),
    ("DEM", "Demonstrative"),
    ("VM", "Verb main (finite or non-finite)"),
    ("VAUX", "Verb auxiliary"),
    ("JJ", "Adjective"),
    ("RB", "Adverb"),
    ("PSP", "Postposition"),
    ("RP", "Particle"),
    ("QF", "Quantifier"),
    ("QC", "Cardinal"),
    ("CC", "Conjunct (coordinating and subordinating)"),
    ("WQ", "Question word"),
    ("QO", "Ordinal"),
    ("INTF", "Intensifier"),
    ("INJ", "Interjection"),
    ("NEG", "Negative"),
    ("SYM", "Symbol"),
    ("XC", "Compound"),
    ("RDP", "Reduplication"),
    ("UNK", "Foreign word"),
)

SENTENCE_TERMINATORS = frozenset("।?!")

_WHITESPACE = re.compile(r"\s")
_RAW_TOKEN = re.compile(r"[।?!]|[^\s।?!]+")


class Tagset:
    """Closed, ordered inventory of tag labels.

    Declaration order matters: the decoder breaks ties in favour of the tag
    declared first.
    """

    def __init__(self, tags: Iterable[str], descriptions: dict[str, str] | None = None):
        tags = tuple(tags)
        if not tags:
            raise ValueError("a tagset needs at least one tag")
        for tag in tags:
            if not isinstance(tag, str) or not tag or _WHITESPACE.search(tag):
                raise ValueError(f"invalid tag label {tag!r}")
            if tag in (BOS, EOS):
                raise ValueError(f"{tag!r} is a reserved boundary marker")
        if len(set(tags)) != len(tags):
            dupes = sorted(t for t, c in Counter(tags).items() if c > 1)
            raise ValueError(f"duplicate tag labels: {', '.join(dupes)}")
        self.tags = tags
        self.descriptions = dict(descriptions or {})
        self._index = {t: i for i, t in enumerate(tags)}

    @classmethod
    def default(cls) -> "Tagset":
        return cls([t for t, _ in DEFAULT_TAGS], dict(DEFAULT_TAGS))

    def index(self, tag: str) -> int:
        try:
            return self._index[tag]
        except KeyError:
            raise DomainError(f"tag {tag!r} is not in the tagset") from None

    def __contains__(self, tag) -> bool:
        return tag in self._index

    def __iter__(self):
        return iter(self.tags)

    def __len__(self) -> int:
        return len(self.tags)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tagset) and self.tags == other.tags

    def __hash__(self):
        return hash(self.tags)

    def __repr__(self):
        return f"Tagset({list(self.tags)!r})"


def normalize_token(surface: str) -> str:
    """Return the NFC form of a token surface, rejecting empty or spaced tokens."""
    surface = unicodedata.normalize("NFC", surface)
    if not surface:
        raise DomainError("empty token")
    if _WHITESPACE.search(surface):
        raise DomainError(f"token {surface!r} contains whitespace")
    return surface


class TaggedToken(NamedTuple):
    word: str
    tag: str


Sentence = tuple  # tuple[str, ...]
TaggedSentence = tuple  # tuple[TaggedToken, ...]


@dataclass(frozen=True)
class TaggedCorpus:
    sentences: tuple
    tagset: Tagset = field(default_factory=Tagset.default)

    def __post_init__(self):
        sentences = tuple(
            tuple(TaggedToken(w, t) for w, t in sent) for sent in self.sentences
        )
        for sent in sentences:
            for tok in sent:
                if tok.tag not in self.tagset:
                    raise TagsetViolationError(tok.tag)
        object.__setattr__(self, "sentences", sentences)

    @classmethod
    def from_sequences(cls, words, tags, tagset=None) -> "TaggedCorpus":
        """Build a corpus from parallel word and tag sequences (``X``, ``y``)."""
        tagset = tagset or Tagset.default()
        sentences = []
        for ws, ts in zip(words, tags, strict=True):
            if len(ws) != len(ts):
                raise DomainError("word and tag sequences differ in length")
            sentences.append([(normalize_token(w), t) for w, t in zip(ws, ts)])
        return cls(tuple(sentences), tagset)

    def __len__(self):
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    @property
    def n_tokens(self) -> int:
        return sum(len(s) for s in self.sentences)

    def words(self) -> list[tuple[str, ...]]:
        return [tuple(tok.word for tok in s) for s in self.sentences]

    def tags(self) -> list[tuple[str, ...]]:
        return [tuple(tok.tag for tok in s) for s in self.sentences]


def parse_tagged_corpus(text: str, tagset: Tagset | None = None) -> TaggedCorpus:
    """Parse the column format into a :class:`TaggedCorpus`.

    Raises ``CorpusParseError`` (with a 1-based line number) for malformed
    lines, ``TagsetViolationError`` for labels outside ``tagset`` and
    ``EmptyCorpusError`` when the document holds no sentence.
    """
    tagset = tagset or Tagset.default()
    sentences = []
    current = []
    seen_sentence = False
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            line = line[:-1]
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        # a token line always has a tab, so tab-less '#' lines are unambiguous
        if not seen_sentence and line.startswith("#") and "\t" not in line:
            continue
        seen_sentence = True
        fields = line.split("\t")
        if len(fields) != 2:
            raise CorpusParseError(
                f"expected 'surface<TAB>tag', got {len(fields)} field(s)", line=lineno
            )
        surface, tag = fields
        try:
            surface = normalize_token(surface)
        except DomainError as exc:
            raise CorpusParseError(str(exc), line=lineno) from None
        if tag not in tagset:
            raise TagsetViolationError(tag, line=lineno)
        current.append(TaggedToken(surface, tag))
    if current:
        sentences.append(current)
    if not sentences:
        raise EmptyCorpusError("corpus contains no sentences")
    return TaggedCorpus(tuple(sentences), tagset)


def write_tagged_corpus(corpus: TaggedCorpus | Iterable[Sequence[tuple[str, str]]]) -> str:
    """Serialize sentences to the column format (inverse of ``parse_tagged_corpus``)."""
    blocks = []
    for sent in corpus:
        blocks.append("".join(f"{w}\t{t}\n" for w, t in sent))
    return "\n".join(blocks)


def parse_raw_text(text: str) -> list[tuple[str, ...]]:
    """Split running text into tokenized sentences.

    Sentences end at a danda, ``?``, ``!`` or a newline. Terminal punctuation
    is detached into its own token; a run of terminators stays with the
    sentence it closes.
    """
    text = unicodedata.normalize("NFC", text)
    sentences = []
    for line in text.split("\n"):
        current: list[str] = []
        for tok in _RAW_TOKEN.findall(line):
            if current and current[-1] in SENTENCE_TERMINATORS and tok not in SENTENCE_TERMINATORS:
                sentences.append(tuple(current))
                current = []
            current.append(tok)
        if current:
            sentences.append(tuple(current))
    return sentences


def parse_tokenized_text(text: str) -> list[tuple[str, ...]]:
    """Read one-token-per-line text, blank lines between sentences.

    Anything after a tab is ignored, so a tagged corpus file can be re-tagged.
    """
    sentences = []
    current = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        if not line.strip():
            if current:
                sentences.append(tuple(current))
                current = []
            continue
        surface = line.split("\t", 1)[0]
        try:
            current.append(normalize_token(surface))
        except DomainError as exc:
            raise CorpusParseError(str(exc), line=lineno) from None
    if current:
        sentences.append(tuple(current))
    return sentences


@dataclass(frozen=True)
class ValidationReport:
    n_sentences: int
    n_tokens: int
    vocabulary: frozenset
    tag_frequencies: dict
    empty_sentences: tuple

    @property
    def vocabulary_size(self) -> int:
        return len(self.vocabulary)


def validate_corpus(corpus: TaggedCorpus) -> ValidationReport:
    tag_freq = Counter()
    vocab = set()
    empty = []
    for i, sent in enumerate(corpus.sentences):
        if not sent:
            empty.append(i)
        for word, tag in sent:
            vocab.add(word)
            tag_freq[tag] += 1
    return ValidationReport(
        n_sentences=len(corpus.sentences),
        n_tokens=sum(len(s) for s in corpus.sentences),
        vocabulary=frozenset(vocab),
        tag_frequencies=dict(tag_freq),
        empty_sentences=tuple(empty),
    )


def train_test_split_corpus(corpus: TaggedCorpus, ratio: float = 0.8, seed: int = 0):
    """Shuffle sentences with a seeded RNG and split them ``ratio`` / ``1 - ratio``."""
    if not 0.0 < ratio < 1.0:
        raise ValueError("ratio must lie strictly between 0 and 1")
    order = list(range(len(corpus.sentences)))
    random.Random(seed).shuffle(order)
    cut = int(round(len(order) * ratio))
    train = tuple(corpus.sentences[i] for i in order[:cut])
    test = tuple(corpus.sentences[i] for i in order[cut:])
    return TaggedCorpus(train, corpus.tagset), TaggedCorpus(test, corpus.tagset)

"""Input checks for the estimator API.

Sentences are ragged, so sklearn's ``check_array`` does not apply; these
helpers play the same role for lists of token sequences.
"""

from __future__ import annotations

from .corpus import TaggedCorpus, Tagset, normalize_token
from .exceptions import DomainError


def check_sentences(X, *, allow_empty: bool = False) -> list[tuple[str, ...]]:
    """Return ``X`` as a list of tuples of normalized tokens.

    A bare string is rejected: it would silently be read as a sentence of
    single characters.
    """
    if isinstance(X, (str, bytes)):
        raise TypeError("X must be a sequence of sentences, got a string")
    if isinstance(X, TaggedCorpus):
        return X.words()
    out = []
    for i, sent in enumerate(X):
        if isinstance(sent, (str, bytes)):
            raise TypeError(f"sentence {i} is a string; expected a sequence of tokens")
        sent = tuple(normalize_token(w) for w in sent)
        if not sent and not allow_empty:
            raise DomainError(f"sentence {i} is empty")
        out.append(sent)
    if not out and not allow_empty:
        raise DomainError("X contains no sentences")
    return out


def check_X_y(X, y, tagset: Tagset) -> TaggedCorpus:
    """Validate parallel sentences and tag sequences and wrap them as a corpus.

    ``X`` may also be a :class:`TaggedCorpus` (or a list of ``(word, tag)``
    sentences) with ``y=None``.
    """
    if isinstance(X, (str, bytes)):
        raise TypeError("X must be a sequence of sentences, got a string")
    if y is None:
        if isinstance(X, TaggedCorpus):
            return X
        pairs = [list(sent) for sent in X]
        X = [[w for w, _ in sent] for sent in pairs]
        y = [[t for _, t in sent] for sent in pairs]
    sentences = check_sentences(X)
    y = [tuple(tags) for tags in y]
    if len(y) != len(sentences):
        raise DomainError(f"X has {len(sentences)} sentences but y has {len(y)}")
    return TaggedCorpus.from_sequences(sentences, y, tagset)

"""Most-likely tag sequence search.

The score of a tagging is ``sum_i log P(w_i|t_i) + log P(t_i|t_{i-2}, t_{i-1})``
plus the final ``log P(EOS|t_{n-1}, t_n)``. Every path here accumulates it in
the same order, ``(score + emission) + transition``, so scores computed by
different routes compare exactly.

Ties between equally scored taggings are broken by tagset declaration order.
Viterbi applies that rule at each backpointer, which picks, among all optimal
sequences, the smallest under the key ``(t_{n-1}, t_n, t_{n-2}, ..., t_1)``;
the exhaustive decoder uses the same key. Scores within a relative
``TIE_RTOL`` count as tied: mathematically equal paths can differ in the last
bit once summed in floating point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .corpus import TaggedToken, normalize_token
from .exceptions import CapExceededError, DomainError
from .model import TagModel

DEFAULT_CAP = 6
TIE_RTOL = 1e-12


def _tie_floor(best):
    # -inf stays -inf (no inf - inf)
    return best - TIE_RTOL * np.maximum(1.0, np.abs(best))


@dataclass(frozen=True)
class DecodeResult:
    tagged: tuple
    log_score: float

    @property
    def tags(self) -> list[str]:
        return [tok.tag for tok in self.tagged]

    per_token_tags = tags


def _prepare(model: TagModel, sentence, emission_scale: float, tags):
    if isinstance(sentence, str):
        raise TypeError("sentence must be a sequence of tokens, not a string")
    words = tuple(normalize_token(w) for w in sentence)
    if not words:
        raise DomainError("cannot decode an empty sentence")
    if emission_scale <= 0:
        raise ValueError("emission_scale must be positive")
    offset = math.log(emission_scale)
    E = np.stack([model.log_emissions(w) for w in words])
    if offset:
        E = E + offset
    if tags is not None:
        allowed = {model.tagset.index(t) for t in tags}
        mask = np.array([i not in allowed for i in range(len(model.tagset))])
        E = np.where(mask[None, :], -np.inf, E)
    return words, E


def _result(model, words, idx, score):
    labels = model.tagset.tags
    return DecodeResult(tuple(TaggedToken(w, labels[i]) for w, i in zip(words, idx)), float(score))


def _fallback(model, words, E):
    # np.argmax returns the first maximum, i.e. the earliest declared tag
    return _result(model, words, [int(np.argmax(row)) for row in E], -math.inf)


def viterbi_decode(model: TagModel, sentence, *, beam_width: int | None = None,
                   emission_scale: float = 1.0, tags=None) -> DecodeResult:
    """Exact (or, with ``beam_width``, beam-pruned) search over tag-pair states.

    ``tags`` restricts the candidate labels; ``emission_scale`` multiplies every
    emission probability by a constant and exists for testing score invariances.
    """
    words, E = _prepare(model, sentence, emission_scale, tags)
    A = model.log_transitions
    T = len(model.tagset)
    bos = eos = T
    n = len(words)

    # delta[a, b]: best score of a prefix ending in tags (a, b); BOS lives at index T
    delta = np.full((T + 1, T + 1), -np.inf)
    delta[bos, bos] = 0.0
    back = np.zeros((n, T + 1, T + 1), dtype=np.intp)
    for i in range(n):
        cand = (delta[:, :, None] + E[i][None, None, :]) + A[:, :, :T]
        floor = _tie_floor(cand.max(axis=0))
        best_prev = np.argmax(cand >= floor[None], axis=0)
        new = np.full((T + 1, T + 1), -np.inf)
        new[:, :T] = np.take_along_axis(cand, best_prev[None], axis=0)[0]
        back[i, :, :T] = best_prev
        if beam_width is not None and beam_width < np.isfinite(new).sum():
            flat = new.ravel()
            cutoff = np.sort(flat)[-beam_width]
            new[new < cutoff] = -np.inf
        delta = new

    final = delta + A[:, :, eos]
    top = final.max()
    if top == -np.inf:
        return _fallback(model, words, E)
    flat = int(np.argmax(final.ravel() >= _tie_floor(top)))
    a, b = divmod(flat, T + 1)
    path = [b]
    if n > 1:
        path.append(a)
    for i in range(n - 1, 1, -1):
        prev = int(back[i, a, b])
        path.append(prev)
        a, b = prev, a
    path.reverse()
    return _result(model, words, path, final.flat[flat])


def _score(A, E, idx, bos):
    s = 0.0
    t2 = t1 = bos
    for i, t in enumerate(idx):
        s = (s + E[i][t]) + A[t2][t1][t]
        t2, t1 = t1, t
    return s + A[t2][t1][bos]  # EOS shares index T with BOS


def sequence_log_prob(model: TagModel, tagged, *, emission_scale: float = 1.0) -> float:
    """Log score of a complete tagging (``-inf`` when any factor is zero)."""
    tagged = [TaggedToken(*tok) for tok in tagged]
    if not tagged:
        raise DomainError("cannot score an empty sentence")
    idx = [model.tagset.index(tok.tag) for tok in tagged]
    _, E = _prepare(model, [tok.word for tok in tagged], emission_scale, None)
    return float(_score(model.log_transitions, E, idx, len(model.tagset)))


def brute_force_decode(model: TagModel, sentence, *, cap: int = DEFAULT_CAP,
                       emission_scale: float = 1.0, tags=None) -> DecodeResult:
    """Enumerate every tagging and keep the best one (test oracle)."""
    if len(sentence) > cap:
        raise CapExceededError(f"sentence of length {len(sentence)} exceeds cap {cap}")
    words, E = _prepare(model, sentence, emission_scale, tags)
    T = len(model.tagset)
    candidates = range(T) if tags is None else sorted(model.tagset.index(t) for t in tags)
    # plain lists: same float64 arithmetic, much faster scalar indexing
    A = model.log_transitions.tolist()
    E = E.tolist()
    n = len(words)
    scored = []
    for idx in itertools.product(candidates, repeat=n):
        s = _score(A, E, idx, T)
        if s != -math.inf:
            scored.append((s, idx))
    if not scored:
        return _fallback(model, words, np.asarray(E))
    floor = float(_tie_floor(max(s for s, _ in scored)))

    def key(idx):
        padded = (T,) + idx
        return (padded[-2], padded[-1]) + tuple(reversed(padded[1:-2]))

    s, idx = min(((s, idx) for s, idx in scored if s >= floor), key=lambda p: key(p[1]))
    return _result(model, words, idx, s)

"""Estimators with the scikit-learn ``fit`` / ``predict`` / ``score`` API.

``X`` is a list of sentences (each a sequence of token strings) and ``y`` the
matching list of tag sequences.
"""

from __future__ import annotations

from collections import Counter

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .corpus import TaggedCorpus, Tagset
from .decoder import brute_force_decode, viterbi_decode
from .model import SmoothingConfig, collect_counts, finalize
from .validation import check_sentences, check_X_y

_SMOOTHING_ALIASES = {"none": "none", "addk": "add-k", "add-k": "add-k",
                      "interp": "interpolation", "interpolation": "interpolation"}
_OOV_ALIASES = {"uniform": "uniform-open-class", "uniform-open-class": "uniform-open-class",
                "singleton": "singleton-tag-distribution",
                "singleton-tag-distribution": "singleton-tag-distribution"}


def _accuracy(y_true, y_pred) -> float:
    total = correct = 0
    for gold, pred in zip(y_true, y_pred, strict=True):
        if len(gold) != len(pred):
            raise ValueError("gold and predicted sentences differ in length")
        total += len(gold)
        correct += sum(g == p for g, p in zip(gold, pred))
    return correct / total if total else 0.0


class TrigramTagger(BaseEstimator):
    """Second-order HMM part-of-speech tagger.

    Parameters
    ----------
    order : {1, 2, 3}, default=3
        Markov order of the tag model; 3 conditions on the two previous tags.
    smoothing : {"interpolation", "add-k", "none"}, default="interpolation"
        Transition smoothing. ``"none"`` is the plain relative-frequency
        estimate; interpolation weights are estimated from the training counts
        unless ``lambdas`` is given.
    k : float, default=1.0
        Pseudo-count for add-k smoothing.
    lambdas : tuple of 3 floats or None
        Unigram, bigram and trigram weights for interpolation.
    oov : {"uniform-open-class", "singleton-tag-distribution"}
        Emission estimate for words not seen in training.
    open_class : sequence of str or None
        Tags an unknown word may receive under ``"uniform-open-class"``.
    tagset : Tagset or sequence of str or None
        Tag inventory; defaults to the 23-label IL tagset.
    beam_width : int or None
        Prune the Viterbi trellis to this many states per position.
    cap : int or None
        When set, decode by exhaustive enumeration (sentences up to ``cap``
        tokens) instead of Viterbi.

    Attributes
    ----------
    model_ : TagModel
    tagset_ : Tagset
    lambdas_ : tuple or None
        Interpolation weights actually used.
    """

    def __init__(self, order=3, smoothing="interpolation", k=1.0, lambdas=None,
                 oov="uniform-open-class", open_class=None, tagset=None,
                 beam_width=None, cap=None):
        self.order = order
        self.smoothing = smoothing
        self.k = k
        self.lambdas = lambdas
        self.oov = oov
        self.open_class = open_class
        self.tagset = tagset
        self.beam_width = beam_width
        self.cap = cap

    def _resolve_tagset(self) -> Tagset:
        if self.tagset is None:
            return Tagset.default()
        if isinstance(self.tagset, Tagset):
            return self.tagset
        return Tagset(self.tagset)

    def fit(self, X, y=None):
        tagset = X.tagset if isinstance(X, TaggedCorpus) and y is None else self._resolve_tagset()
        corpus = check_X_y(X, y, tagset)
        try:
            mode = _SMOOTHING_ALIASES[self.smoothing]
            oov_mode = _OOV_ALIASES[self.oov]
        except KeyError as exc:
            raise ValueError(f"unknown option {exc.args[0]!r}") from None
        config = SmoothingConfig(mode=mode, k=self.k, lambdas=self.lambdas, oov_mode=oov_mode)
        self.model_ = finalize(collect_counts(corpus), config, self.order,
                               open_class=self.open_class)
        self.tagset_ = corpus.tagset
        self.lambdas_ = self.model_.lambdas
        return self

    @classmethod
    def from_model(cls, model, **params):
        """Wrap an already finalized :class:`TagModel`."""
        s = model.smoothing
        est = cls(order=model.order, smoothing=s.mode, k=s.k, lambdas=s.lambdas,
                  oov=s.oov_mode, open_class=list(model.open_class),
                  tagset=model.tagset, **params)
        est.model_ = model
        est.tagset_ = model.tagset
        est.lambdas_ = s.lambdas
        return est

    def decode(self, X):
        """Return a :class:`DecodeResult` per sentence."""
        check_is_fitted(self, "model_")
        sentences = check_sentences(X, allow_empty=True)
        results = []
        for sent in sentences:
            if not sent:
                results.append(None)
            elif self.cap is not None:
                results.append(brute_force_decode(self.model_, sent, cap=self.cap))
            else:
                results.append(viterbi_decode(self.model_, sent, beam_width=self.beam_width))
        return results

    def predict(self, X):
        return [r.tags if r is not None else [] for r in self.decode(X)]

    def score(self, X, y=None):
        """Token accuracy (fraction of correctly tagged tokens)."""
        if y is None:
            corpus = check_X_y(X, None, getattr(self, "tagset_", self._resolve_tagset()))
            X, y = corpus.words(), corpus.tags()
        return _accuracy(y, self.predict(X))


class MostFrequentTagTagger(BaseEstimator):
    """Baseline: each known word gets its most frequent training tag.

    Unknown words get the most frequent tag overall. Frequency ties go to the
    tag declared first in the tagset.
    """

    def __init__(self, tagset=None):
        self.tagset = tagset

    def fit(self, X, y=None):
        if isinstance(X, TaggedCorpus) and y is None:
            tagset = X.tagset
        elif isinstance(self.tagset, Tagset):
            tagset = self.tagset
        else:
            tagset = Tagset.default() if self.tagset is None else Tagset(self.tagset)
        corpus = check_X_y(X, y, tagset)
        by_word: dict[str, Counter] = {}
        overall = Counter()
        for sent in corpus.sentences:
            for word, tag in sent:
                by_word.setdefault(word, Counter())[tag] += 1
                overall[tag] += 1

        def pick(counter):
            return max(counter, key=lambda t: (counter[t], -tagset.index(t)))

        self.lexicon_ = {w: pick(c) for w, c in by_word.items()}
        self.default_tag_ = pick(overall)
        self.tagset_ = tagset
        return self

    def predict(self, X):
        check_is_fitted(self, "lexicon_")
        return [[self.lexicon_.get(w, self.default_tag_) for w in sent]
                for sent in check_sentences(X, allow_empty=True)]

    def score(self, X, y=None):
        if y is None:
            corpus = check_X_y(X, None, self.tagset_)
            X, y = corpus.words(), corpus.tags()
        return _accuracy(y, self.predict(X))

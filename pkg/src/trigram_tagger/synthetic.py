"""Seeded synthetic corpora from a known second-order tag process.

Used to check that higher model orders actually pay off: the next tag depends
on the previous two, and most words can be emitted by several tags.
"""

from __future__ import annotations

import random
from importlib import resources

from .corpus import TaggedCorpus, Tagset, parse_tagged_corpus

SYNTHETIC_TAGS = ("NN", "VM", "JJ", "PSP", "DEM", "RB")
BUNDLED_SYNTHETIC = "synthetic_order2.tsv"


def make_order2_process(seed: int = 13, tags=SYNTHETIC_TAGS, n_words: int = 24,
                        peak: float = 0.8, words_per_tag: int = 6):
    """Random transition and emission tables for a second-order tag process.

    Every (prev2, prev1) context prefers one next tag with probability
    ``peak``; each word is shared by several tags.
    """
    rng = random.Random(seed)
    tags = tuple(tags)
    contexts = [(a, b) for a in ("<s>",) + tags for b in ("<s>",) + tags
                if not (b == "<s>" and a != "<s>")]
    transitions = {}
    for ctx in contexts:
        favourite = rng.choice(tags)
        rest = (1.0 - peak) / (len(tags) - 1)
        transitions[ctx] = [peak if t == favourite else rest for t in tags]
    words = [f"w{i:02d}" for i in range(n_words)]
    emissions = {}
    for tag in tags:
        vocab = rng.sample(words, words_per_tag)
        weights = [rng.uniform(1.0, 3.0) for _ in vocab]
        emissions[tag] = (vocab, weights)
    return tags, transitions, emissions


def generate_corpus(n_sentences: int = 500, seed: int = 13, min_len: int = 4,
                    max_len: int = 12, **process_kwargs) -> TaggedCorpus:
    tags, transitions, emissions = make_order2_process(seed=seed, **process_kwargs)
    rng = random.Random(seed + 1)
    sentences = []
    for _ in range(n_sentences):
        length = rng.randint(min_len, max_len)
        prev2 = prev1 = "<s>"
        sent = []
        for _ in range(length):
            tag = rng.choices(tags, weights=transitions[(prev2, prev1)])[0]
            vocab, weights = emissions[tag]
            sent.append((rng.choices(vocab, weights=weights)[0], tag))
            prev2, prev1 = prev1, tag
        sentences.append(sent)
    return TaggedCorpus(tuple(sentences), Tagset.default())


def load_bundled_synthetic() -> TaggedCorpus:
    """The 500-sentence corpus shipped with the package (``generate_corpus()`` output)."""
    text = resources.files("trigram_tagger").joinpath("data", BUNDLED_SYNTHETIC).read_text("utf-8")
    return parse_tagged_corpus(text)


def load_toy_corpus() -> TaggedCorpus:
    """Three-sentence toy corpus: w1/NN w2/VM; w1/NN w3/VM; w1/JJ w2/VM."""
    text = resources.files("trigram_tagger").joinpath("data", "t1.tsv").read_text("utf-8")
    return parse_tagged_corpus(text)

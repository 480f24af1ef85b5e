import random

import pytest
from hypothesis import strategies as st

from trigram_tagger import SmoothingConfig, TaggedCorpus, Tagset, collect_counts, finalize
from trigram_tagger.synthetic import load_toy_corpus

T1_TEXT = "w1\tNN\nw2\tVM\n\nw1\tNN\nw3\tVM\n\nw1\tJJ\nw2\tVM\n"


@pytest.fixture
def t1():
    return load_toy_corpus()


@pytest.fixture
def t1_counts(t1):
    return collect_counts(t1)


@pytest.fixture
def t1_model(t1_counts):
    return finalize(t1_counts, SmoothingConfig(mode="none"), 3)


# random corpora over small tagsets ------------------------------------------

TAG_POOL = ("NN", "VM", "JJ", "PSP", "RB")


@st.composite
def corpora(draw, max_tags=5, max_sentences=8, max_len=7):
    n_tags = draw(st.integers(1, max_tags))
    tagset = Tagset(TAG_POOL[:n_tags])
    vocab = [f"v{i}" for i in range(draw(st.integers(1, 6)))]
    token = st.tuples(st.sampled_from(vocab), st.sampled_from(tagset.tags))
    sentences = draw(st.lists(st.lists(token, min_size=1, max_size=max_len),
                              min_size=1, max_size=max_sentences))
    return TaggedCorpus(tuple(sentences), tagset)


def random_corpus(rng: random.Random, max_tags=5, max_sentences=8, max_len=6):
    n_tags = rng.randint(1, max_tags)
    tagset = Tagset([f"T{i}" for i in range(n_tags)])
    vocab = [f"v{i}" for i in range(rng.randint(1, 6))]
    sentences = [
        [(rng.choice(vocab), rng.choice(tagset.tags)) for _ in range(rng.randint(1, max_len))]
        for _ in range(rng.randint(1, max_sentences))
    ]
    return TaggedCorpus(tuple(sentences), tagset)


def random_model(rng: random.Random, **kwargs):
    corpus = random_corpus(rng, **kwargs)
    tagset = corpus.tagset
    smoothing = SmoothingConfig(
        mode=rng.choice(["none", "add-k", "interpolation"]),
        k=rng.choice([0.1, 0.5, 1.0, 2.0]),
        oov_mode=rng.choice(["uniform-open-class", "singleton-tag-distribution"]),
    )
    open_class = rng.sample(tagset.tags, rng.randint(1, len(tagset)))
    model = finalize(collect_counts(corpus), smoothing, rng.randint(1, 3), open_class=open_class)
    vocab = sorted({w for s in corpus for w, _ in s})
    return model, vocab


def random_sentence(rng: random.Random, vocab, max_len=6):
    return [rng.choice(vocab + ["oov_a", "oov_b"]) for _ in range(rng.randint(1, max_len))]

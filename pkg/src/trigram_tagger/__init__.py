"""Trigram part-of-speech tagging: counting, smoothing, Viterbi decoding and evaluation."""

from .corpus import (
    BOS,
    EOS,
    TaggedCorpus,
    TaggedToken,
    Tagset,
    ValidationReport,
    normalize_token,
    parse_raw_text,
    parse_tagged_corpus,
    parse_tokenized_text,
    validate_corpus,
    write_tagged_corpus,
)
from .decoder import DecodeResult, brute_force_decode, sequence_log_prob, viterbi_decode
from .evaluation import EvalReport, evaluate, per_tag_metrics
from .model import (
    CountsTable,
    SmoothingConfig,
    TagModel,
    collect_counts,
    deserialize_model,
    estimate_interpolation_weights,
    finalize,
    serialize_model,
)
from .tagger import MostFrequentTagTagger, TrigramTagger

__version__ = "0.1.0"

__all__ = [
    "BOS", "EOS", "TaggedCorpus", "TaggedToken", "Tagset", "ValidationReport",
    "normalize_token", "parse_raw_text", "parse_tagged_corpus", "parse_tokenized_text",
    "validate_corpus", "write_tagged_corpus",
    "DecodeResult", "brute_force_decode", "sequence_log_prob", "viterbi_decode",
    "EvalReport", "evaluate", "per_tag_metrics",
    "CountsTable", "SmoothingConfig", "TagModel", "collect_counts", "deserialize_model",
    "estimate_interpolation_weights", "finalize", "serialize_model",
    "MostFrequentTagTagger", "TrigramTagger",
]

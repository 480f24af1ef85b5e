"""Token-level tagging accuracy, confusion matrix and per-tag scores."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext

from .corpus import TaggedCorpus
from .exceptions import AlignmentError


@dataclass(frozen=True)
class EvalReport:
    total_tokens: int
    correct_tokens: int
    confusion: dict  # (gold, predicted) -> count
    per_tag: dict  # tag -> (precision, recall, f1)
    labels: tuple = ()

    @property
    def accuracy_percent(self) -> float:
        return 100.0 * self.correct_tokens / self.total_tokens if self.total_tokens else 0.0

    @property
    def accuracy(self) -> float:
        return self.correct_tokens / self.total_tokens if self.total_tokens else 0.0

    def accuracy_str(self, places: int = 2) -> str:
        """Accuracy percentage rounded half-up from the exact ratio."""
        return format_percent(self.correct_tokens, self.total_tokens, places)


def format_percent(correct: int, total: int, places: int = 2) -> str:
    if total == 0:
        return f"{0:.{places}f}"
    with localcontext() as ctx:
        ctx.prec = 50
        exact = Decimal(100 * correct) / Decimal(total)
        return str(exact.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))


def per_tag_metrics(confusion: dict, tags=None) -> dict:
    """Precision, recall and F1 per tag; every 0/0 is taken as 0.

    ``tags`` adds labels that may not occur in ``confusion`` at all.
    """
    labels = list(tags or [])
    for gold, pred in confusion:
        for t in (gold, pred):
            if t not in labels:
                labels.append(t)
    rows = Counter()
    cols = Counter()
    for (gold, pred), n in confusion.items():
        rows[gold] += n
        cols[pred] += n
    out = {}
    for t in labels:
        diag = confusion.get((t, t), 0)
        p = diag / cols[t] if cols[t] else 0.0
        r = diag / rows[t] if rows[t] else 0.0
        f = 2 * p * r / (p + r) if p + r else 0.0
        out[t] = (p, r, f)
    return out


def evaluate(gold: TaggedCorpus, predicted: TaggedCorpus) -> EvalReport:
    """Compare two aligned corpora token by token.

    Raises ``AlignmentError`` at the first sentence-count, length or surface
    mismatch.
    """
    gs, ps = gold.sentences, predicted.sentences
    if len(gs) != len(ps):
        raise AlignmentError(
            f"gold has {len(gs)} sentences, predicted has {len(ps)}",
            sentence=min(len(gs), len(ps)))
    confusion = Counter()
    for i, (g_sent, p_sent) in enumerate(zip(gs, ps)):
        if len(g_sent) != len(p_sent):
            raise AlignmentError(
                f"sentence {i + 1}: gold has {len(g_sent)} tokens, predicted has {len(p_sent)}",
                sentence=i, token=min(len(g_sent), len(p_sent)))
        for j, (g, p) in enumerate(zip(g_sent, p_sent)):
            if g.word != p.word:
                raise AlignmentError(
                    f"sentence {i + 1}, token {j + 1}: gold {g.word!r} != predicted {p.word!r}",
                    sentence=i, token=j)
            confusion[(g.tag, p.tag)] += 1
    total = sum(confusion.values())
    correct = sum(n for (g, p), n in confusion.items() if g == p)
    labels = list(gold.tagset.tags)
    labels += [t for t in predicted.tagset.tags if t not in labels]
    return EvalReport(
        total_tokens=total,
        correct_tokens=correct,
        confusion=dict(confusion),
        per_tag=per_tag_metrics(confusion, labels),
        labels=tuple(labels),
    )


def format_report(report: EvalReport) -> str:
    """Human-readable summary table (tags that never occur are omitted)."""
    lines = [
        f"Tokens:    {report.total_tokens}",
        f"Correct:   {report.correct_tokens}",
        f"Accuracy:  {report.accuracy_str()}%",
        "",
        f"{'tag':<8}{'precision':>10}{'recall':>10}{'f1':>10}{'support':>9}",
    ]
    support = Counter()
    for (g, _), n in report.confusion.items():
        support[g] += n
    predicted = {p for _, p in report.confusion}
    for tag in report.labels:
        if not support[tag] and tag not in predicted:
            continue
        p, r, f = report.per_tag[tag]
        lines.append(f"{tag:<8}{p:>10.4f}{r:>10.4f}{f:>10.4f}{support[tag]:>9}")
    return "\n".join(lines) + "\n"


def dump_report(report: EvalReport) -> str:
    """Machine-readable ``key=value`` lines followed by the confusion matrix."""
    lines = [
        f"total_tokens={report.total_tokens}",
        f"correct_tokens={report.correct_tokens}",
        f"accuracy_percent={report.accuracy_str()}",
        f"accuracy_exact={report.accuracy_percent!r}",
    ]
    for tag in report.labels:
        p, r, f = report.per_tag[tag]
        lines.append(f"tag.{tag}={p!r},{r!r},{f!r}")
    labels = report.labels
    lines.append("confusion\t" + "\t".join(labels))
    for g in labels:
        lines.append(g + "\t" + "\t".join(str(report.confusion.get((g, p), 0)) for p in labels))
    return "\n".join(lines) + "\n"

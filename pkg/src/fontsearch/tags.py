"""Tag normalization and vocabulary construction.

Raw tags pass through a fixed pipeline: lowercase, misspelling lookup,
per-word lemmatization (exceptions table, then suffix rules), n-gram
hyphenation, duplicate merge, and a frequency cutoff. All tables are plain
TSV shipped with the package so the pipeline is fully deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from importlib import resources


class EmptyVocabularyError(ValueError):
    """Raised when normalization filters out every tag."""


def _load_tsv(name: str) -> list[list[str]]:
    text = resources.files("fontsearch.data").joinpath(name).read_text("utf-8")
    rows = []
    for line in text.splitlines():
        if line.strip():
            rows.append(line.split("\t"))
    return rows


_MISSPELLINGS = {k: v for k, v in _load_tsv("misspellings.tsv")}
_LEMMA_EXCEPTIONS = {k: v for k, v in _load_tsv("lemma_exceptions.tsv")}
_LEMMA_RULES = [(sfx, repl, int(minlen)) for sfx, repl, minlen in _load_tsv("lemma_rules.tsv")]


def lemmatize_word(word: str) -> str:
    if word in _LEMMA_EXCEPTIONS:
        return _LEMMA_EXCEPTIONS[word]
    for suffix, repl, min_stem in _LEMMA_RULES:
        if word.endswith(suffix) and len(word) - len(suffix) >= min_stem:
            return word[: -len(suffix)] + repl if suffix else word
    return word


def normalize_tag(raw: str) -> str:
    """Normalize a single raw tag string. Returns '' if nothing survives."""
    tag = raw.strip().lower()
    if not tag:
        return ""
    tag = _MISSPELLINGS.get(tag, tag)
    words = [w for w in tag.replace("-", " ").split() if w]
    words = [lemmatize_word(_MISSPELLINGS.get(w, w)) for w in words]
    return "-".join(words)


@dataclass(frozen=True)
class TagVocabulary:
    """Ordered tag list with per-tag training-set font counts."""

    tags: tuple[str, ...]
    frequency: dict[str, int] = field(compare=False)

    def __post_init__(self):
        if len(set(self.tags)) != len(self.tags):
            raise ValueError("duplicate tags in vocabulary")

    def __len__(self) -> int:
        return len(self.tags)

    def __contains__(self, tag: str) -> bool:
        return tag in self.frequency

    def index(self, tag: str) -> int:
        return self.tags.index(tag)

    def label_vector(self, tags: set[str]) -> list[int]:
        """Binary indicator over the vocabulary for one font's tag set."""
        bits = [1 if t in tags else 0 for t in self.tags]
        if not any(bits):
            raise ValueError("label vector has no set bits")
        return bits

    def to_dict(self) -> dict:
        return {"tags": list(self.tags), "frequency": dict(self.frequency)}

    @classmethod
    def from_dict(cls, d: dict) -> "TagVocabulary":
        return cls(tags=tuple(d["tags"]), frequency=dict(d["frequency"]))


def normalize_tag_lists(
    raw_tag_lists: dict[str, list[str]],
    min_count: int = 10,
    count_keys: set[str] | None = None,
) -> tuple[TagVocabulary, dict[str, set[str]], list[str]]:
    """Normalize per-font raw tags and build the vocabulary.

    raw_tag_lists maps font_id -> raw tag strings. Frequencies are counted
    once per font over `count_keys` (the training split; defaults to all
    fonts). Tags occurring on fewer than min_count counted fonts are
    dropped. Returns (vocabulary, per-font normalized tag sets, ids of
    fonts left with zero tags).
    """
    if any(not tags for tags in raw_tag_lists.values()):
        raise ValueError("every font must have at least one raw tag")
    normalized: dict[str, set[str]] = {}
    for font_id, raws in raw_tag_lists.items():
        tags = {t for t in (normalize_tag(r) for r in raws) if t}
        normalized[font_id] = tags

    counted = count_keys if count_keys is not None else set(raw_tag_lists)
    freq = Counter()
    for font_id in counted:
        freq.update(normalized.get(font_id, ()))

    kept = {t for t, c in freq.items() if c >= min_count}
    if not kept:
        raise EmptyVocabularyError(
            f"no tag reaches min_count={min_count} over {len(counted)} counted fonts"
        )

    dropped_fonts = []
    out: dict[str, set[str]] = {}
    for font_id, tags in normalized.items():
        tags &= kept
        if tags:
            out[font_id] = tags
        else:
            dropped_fonts.append(font_id)

    ordered = tuple(sorted(kept, key=lambda t: (-freq[t], t)))
    vocab = TagVocabulary(tags=ordered, frequency={t: freq[t] for t in ordered})
    return vocab, out, sorted(dropped_fonts)

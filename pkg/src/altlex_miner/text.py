"""Tokenization and token-span arithmetic shared by every other module.

The tokenizer is deliberately rule-based and dependency-free: words (with
internal hyphens and apostrophes kept intact, so "don't" and
"African-Americans" stay single tokens) and standalone punctuation marks.
All matching downstream is case-insensitive, so every token carries its
lowercased form alongside the surface and character offsets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

# A word is a run of word characters, optionally joined by internal hyphens
# or apostrophes; anything else that is not whitespace is a one-char token.
_TOKEN_RE = re.compile(r"\w+(?:[-'’]\w+)*|\S")


@dataclass(frozen=True, slots=True)
class Token:
    """A single token with character offsets into the owning sentence."""

    surface: str
    lowercased: str
    char_start: int
    char_end: int

    def __post_init__(self) -> None:
        if not self.char_start < self.char_end:
            raise ValueError(f"empty token span [{self.char_start}, {self.char_end})")


@dataclass(frozen=True, slots=True)
class TokenSpan:
    """Half-open token-index interval [start, end) within a Sentence."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not (0 <= self.start < self.end):
            raise ValueError(f"invalid span [{self.start}, {self.end})")

    def overlaps(self, other: "TokenSpan") -> bool:
        return self.start < other.end and other.start < self.end


@dataclass(frozen=True, slots=True)
class Sentence:
    """Raw text plus its tokens; the unit all detection and mining works on."""

    raw: str
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def surfaces(self, span: TokenSpan | None = None) -> tuple[str, ...]:
        toks = self.tokens if span is None else self.tokens[span.start : span.end]
        return tuple(t.surface for t in toks)

    def lowers(self, span: TokenSpan | None = None) -> tuple[str, ...]:
        toks = self.tokens if span is None else self.tokens[span.start : span.end]
        return tuple(t.lowercased for t in toks)


def tokenize(raw: str) -> Sentence:
    """Split ``raw`` into word and punctuation tokens with char offsets.

    Punctuation marks become their own tokens; hyphenated words and clitics
    ("don't", "it's") remain single tokens. Empty or whitespace-only input
    yields a sentence with no tokens.
    """
    tokens = tuple(
        Token(
            surface=m.group(),
            lowercased=m.group().lower(),
            char_start=m.start(),
            char_end=m.end(),
        )
        for m in _TOKEN_RE.finditer(raw)
    )
    return Sentence(raw=raw, tokens=tokens)


def match_phrase(sentence: Sentence, phrase: list[str] | tuple[str, ...]) -> list[TokenSpan]:
    """Find every occurrence of ``phrase`` (lowercased token strings).

    Returns the spans left to right; occurrences may overlap each other but
    at most one span starts at any given token index.
    """
    if not phrase:
        raise ValueError("phrase must be non-empty")
    phrase = tuple(phrase)
    width = len(phrase)
    lowers = [t.lowercased for t in sentence.tokens]
    spans = []
    for start in range(len(lowers) - width + 1):
        if tuple(lowers[start : start + width]) == phrase:
            spans.append(TokenSpan(start, start + width))
    return spans

"""Mine alternative lexicalizations of discourse relations from
complex/simple parallel corpora."""

from .corpus import (
    AgreementTable,
    Article,
    SentencePair,
    align_articles,
    cohen_kappa,
    load_aligned_tsv,
    load_article_dir,
    tfidf_cosine,
)
from .discourse import (
    ConnectiveEntry,
    ConnectiveInventory,
    ExplicitAnnotation,
    Level1,
    Sense,
    detect_explicit,
    is_nonexplicit,
    load_inventory,
)
from .lexres import ParaphraseEntry, ParaphraseStore, Resource, expand, load_ppdb, load_synonyms
from .mining import (
    AltLexCandidate,
    AltLexInventory,
    AltLexRecord,
    CaseKind,
    ChangeCase,
    OtherKind,
    categorize,
    mine_corpus,
    mine_pair,
    substitute,
    verify_candidate,
)
from .text import Sentence, Token, TokenSpan, match_phrase, tokenize

__version__ = "0.1.0"

__all__ = [
    "AgreementTable",
    "AltLexCandidate",
    "AltLexInventory",
    "AltLexRecord",
    "Article",
    "CaseKind",
    "ChangeCase",
    "ConnectiveEntry",
    "ConnectiveInventory",
    "ExplicitAnnotation",
    "Level1",
    "OtherKind",
    "ParaphraseEntry",
    "ParaphraseStore",
    "Resource",
    "Sense",
    "Sentence",
    "SentencePair",
    "Token",
    "TokenSpan",
    "align_articles",
    "categorize",
    "cohen_kappa",
    "detect_explicit",
    "expand",
    "is_nonexplicit",
    "load_aligned_tsv",
    "load_article_dir",
    "load_inventory",
    "load_ppdb",
    "load_synonyms",
    "match_phrase",
    "mine_corpus",
    "mine_pair",
    "substitute",
    "tfidf_cosine",
    "tokenize",
    "verify_candidate",
]

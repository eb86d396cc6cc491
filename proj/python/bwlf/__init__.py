"""By-word long-form (BWLF) corpus preparation and categorical recurrence analysis."""

from ._core import (
    AnalysisRow,
    BwlfRecord,
    CleanupRules,
    LexiconDictionary,
    RecurrencePlot,
    RqaMetrics,
    analyze,
    build_matrix,
    clean_line,
    detect_eos,
    detect_speech,
    format_matrix,
    load_rules,
    mark_structure,
    match_word,
    parse_rules,
    recurrence_matrix,
    rqa,
    run_cli,
    strip_word,
)

__all__ = [
    "AnalysisRow",
    "BwlfRecord",
    "CleanupRules",
    "LexiconDictionary",
    "RecurrencePlot",
    "RqaMetrics",
    "analyze",
    "build_matrix",
    "clean_line",
    "detect_eos",
    "detect_speech",
    "format_matrix",
    "load_rules",
    "mark_structure",
    "match_word",
    "parse_rules",
    "recurrence_matrix",
    "rqa",
    "run_cli",
    "strip_word",
]

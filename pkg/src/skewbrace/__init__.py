"""Symbolic construction of the free skew brace over named generators.

Layers: formal letters and reduced free-group words (terms), the two
recursive action operations (actions), a three-valued congruence oracle
for the quotient (quotient), finite models as explicit tables (braces),
evaluation homomorphisms into those models (hom), and a command-line
front end (cli).
"""
from .actions import (act_colon, act_dot, configure_cache, letter_act_colon,
                      letter_act_dot, letter_colon, letter_dot)
from .braces import (BraceTable, DictionaryError, TwoOpBrace,
                     ValidationReport, cyclic_group, enumerate_braces,
                     enumerate_group_tables, enumerate_twoop, format_braces,
                     load_braces, parse_braces, permutation_group_table,
                     save_braces, trivial_brace, twoop_to_brace,
                     verify_brace, verify_twoop)
from .hom import (GeneratorMap, HomCompatReport, check_hom_action_compat,
                  eval_letter, eval_word, load_generator_map,
                  save_generator_map)
from .quotient import (DEFAULT_BUDGET, DISTINCT, EQUAL, UNKNOWN,
                       BraceIdentityReport, Budget, DistinctWitness,
                       EqResult, SearchStats, Step, brace_library,
                       check_brace_identity, decide_eq, labeled_neighbors,
                       neighbors, replay_trace, serialize_trace)
from .terms import (EMPTY, Letter, Word, colon_letter, dot_letter, inv,
                    make_gen, mul, reduce, render_letter, render_word, star,
                    stratum, word_stratum, word_symbols)

__version__ = "0.1.0"

__all__ = [
    "Letter", "Word", "EMPTY", "make_gen", "star", "dot_letter",
    "colon_letter", "reduce", "mul", "inv",
    "stratum", "word_stratum", "word_symbols", "render_letter", "render_word",
    "letter_dot", "letter_colon", "letter_act_dot", "letter_act_colon",
    "act_dot", "act_colon", "configure_cache",
    "Budget", "DEFAULT_BUDGET", "EQUAL", "DISTINCT", "UNKNOWN", "Step",
    "EqResult", "DistinctWitness", "SearchStats", "neighbors",
    "labeled_neighbors", "decide_eq", "replay_trace", "serialize_trace",
    "brace_library", "check_brace_identity", "BraceIdentityReport",
    "BraceTable", "TwoOpBrace", "ValidationReport", "DictionaryError",
    "verify_brace", "trivial_brace", "cyclic_group",
    "permutation_group_table", "enumerate_group_tables", "enumerate_braces",
    "enumerate_twoop", "twoop_to_brace", "verify_twoop", "format_braces",
    "parse_braces", "load_braces", "save_braces",
    "GeneratorMap", "eval_letter", "eval_word", "HomCompatReport",
    "check_hom_action_compat", "save_generator_map", "load_generator_map",
]

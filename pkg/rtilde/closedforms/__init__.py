"""
Closed formulas for R-tilde polynomials in type A.
"""
from rtilde.closedforms.configurations import (
    ChainDecomposition,
    PointConfiguration,
    chain_stats,
    config_is_admissible,
    config_to_element,
    config_to_word,
    general_rtilde_e,
    heap_of,
    in_cone,
    parse_configuration,
    read_configuration,
)
from rtilde.closedforms.conjecture import ScanEntry, conjecture_scan, factor_modified_fibonacci
from rtilde.closedforms.fibonacci import (
    FibPath,
    FibTree,
    Step,
    build_fib_tree,
    fib_paths,
    power_word_rtilde,
    restricted_fib_paths,
)
from rtilde.closedforms.pagliacci import (
    clr_degree,
    clr_to_path,
    clr_words,
    pagliacci_configuration,
    pagliacci_element,
    pagliacci_rtilde,
    pagliacci_word,
)
from rtilde.closedforms.ud_words import (
    CaseLabel,
    CaseTable,
    UDWord,
    is_ud_word,
    transposition_rtilde,
    transposition_word,
    ud_rtilde,
)

__all__ = [
    "CaseLabel", "CaseTable", "ChainDecomposition", "FibPath", "FibTree", "PointConfiguration",
    "ScanEntry", "Step", "UDWord", "build_fib_tree", "chain_stats", "clr_degree", "clr_to_path",
    "clr_words", "config_is_admissible", "config_to_element", "config_to_word", "conjecture_scan",
    "factor_modified_fibonacci", "fib_paths", "general_rtilde_e", "heap_of", "in_cone", "is_ud_word",
    "pagliacci_configuration", "pagliacci_element", "pagliacci_rtilde", "pagliacci_word",
    "parse_configuration", "power_word_rtilde", "read_configuration", "restricted_fib_paths",
    "transposition_rtilde", "transposition_word", "ud_rtilde",
]

"""Perforated tableaux: a combinatorial model for GL_n crystal graphs.

The package implements words and their parsings, perforated tableaux with
canonical left-justified representatives, the bijections among parsed
words, biwords, non-negative integer matrices, ptableaux and RSK pairs,
crystal raising/lowering operators on words and ptableaux, crystal graph
construction and decomposition, tensor products with a generalized
Littlewood-Richardson rule, Schutzenberger evacuation with its operator
factorization, and the push-down/push-up commutator algorithms.
"""

from .core import (
    ParsedWord,
    PTableau,
    Word,
    all_parsings,
    check_grid,
    is_anti_partition_shaped,
    is_minimally_parsed,
    is_partition_shaped,
    is_yamanouchi,
    left_justify,
    minimal_parsing,
    restrict,
    right_justify,
    row_equivalent,
    shape,
    validate_ptableau,
    weight,
    word_weight,
)
from .bijections import (
    Biword,
    NNMatrix,
    SSYTPair,
    biword_from_matrix,
    biword_from_parsed,
    dual,
    longest_weakly_decreasing,
    matrix_from_biword,
    matrix_from_ptableau,
    parsed_from_biword,
    ptableau_from_word,
    rsk,
    word_from_ptableau,
)
from .operators import (
    apply_ops,
    epsilon,
    is_highest_weight,
    is_lowest_weight,
    lowering_operator,
    phi,
    ptab_epsilon,
    ptab_lowering,
    ptab_phi,
    ptab_raising,
    raising_operator,
    rotate,
    rotate_word,
    to_highest_weight,
    to_lowest_weight,
    word_epsilon,
    word_lowering,
    word_phi,
    word_raising,
)
from .graph import (
    CrystalGraph,
    component,
    decompose,
    export_dot,
    export_json,
    isomorphic,
    words_closure,
)
from .tensor import (
    LRFilling,
    SkewShape,
    classical_lr_fillings,
    highest_weight_ptableau,
    is_highest_weight_tensor,
    lr_coefficient,
    lr_table,
    satisfies_word_condition,
    tensor,
    tensor_words,
    word_condition_counting,
)
from .evacuation import (
    evacuate,
    evacuate_with_paths,
    evacuation_as_operators,
    inward_slide_step,
    is_bss_pair,
    is_bss_perforated,
    lusztig_involution,
    processable_corners,
    push_down,
    push_states,
    push_up,
)
from . import errors

__all__ = [name for name in dir() if not name.startswith("_")]

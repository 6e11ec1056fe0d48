"""m-eternal domination on cactus graphs: linear-time solver for Christmas
cacti, a decomposition upper bound for general cacti, an exact game oracle,
constructive defender strategies, and an interactive attack service."""

from .graph import (
    BlockCutTree,
    DisconnectedGraphError,
    Graph,
    GraphClass,
    GraphFormatError,
    GraphKind,
    NotCactusError,
    block_cut_tree,
    classify,
    cycle_edges,
    leaf_blocks,
    parse_graph,
    serialize_graph,
)
from .oracle import (
    Attack,
    GameVariant,
    OracleBudgetError,
    StrategyWitness,
    attack_set,
    domination_number,
    exact_number,
    solve_safety,
    traversable,
    validate_witness,
)
from .reduction import (
    ElementaryKind,
    ReductionStep,
    ReductionTrace,
    choose_reduction,
    elementary_value,
    is_elementary,
    meden_christmas_cactus,
)
from .decomposition import (
    Decomposition,
    RedColoring,
    cactus_upper_bound,
    christmas_decomposition,
    color_red,
    contract_red_components,
)
from .strategy import DefenderEngine, StrategyError, synthesize, verify_strategy
from .generator import GeneratorSpec, enumerate_christmas_cacti, generate

__all__ = [
    "DefenderEngine",
    "Decomposition",
    "ElementaryKind",
    "GeneratorSpec",
    "RedColoring",
    "ReductionStep",
    "ReductionTrace",
    "StrategyError",
    "cactus_upper_bound",
    "choose_reduction",
    "christmas_decomposition",
    "color_red",
    "contract_red_components",
    "elementary_value",
    "enumerate_christmas_cacti",
    "generate",
    "is_elementary",
    "meden_christmas_cactus",
    "synthesize",
    "verify_strategy",
    "Attack",
    "BlockCutTree",
    "DisconnectedGraphError",
    "GameVariant",
    "Graph",
    "GraphClass",
    "GraphFormatError",
    "GraphKind",
    "NotCactusError",
    "OracleBudgetError",
    "StrategyWitness",
    "attack_set",
    "block_cut_tree",
    "classify",
    "cycle_edges",
    "domination_number",
    "exact_number",
    "leaf_blocks",
    "parse_graph",
    "serialize_graph",
    "solve_safety",
    "traversable",
    "validate_witness",
]

__version__ = "0.1.0"

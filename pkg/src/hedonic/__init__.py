"""Stability analysis for hedonic coalition formation games."""

from .core import (
    CapacityError,
    DomainError,
    HedonicError,
    Order,
    Partition,
    Pref,
    PreconditionError,
    PreferenceProfile,
    block_of,
    coalitions_containing,
    compare,
    enumerate_partitions,
    gdot_compare,
    size_vector,
)
from .gameclasses import (
    AshgMatrix,
    BRanking,
    GameSpec,
    ashg_to_profile,
    bhedonic_to_profile,
    enemies_game,
    friends_game,
    is_strict_ashg,
    is_symmetric,
    random_game,
)
from .gamefile import GameFileError, bundled_game, load_game
from .oracle import Family, OracleReport, all_stable, exists_stable, search_counterexample, stable_set_empty, survey
from .restrictions import (
    avoid_sets,
    choice_sets,
    is_bottom_responsive,
    is_mutual_bottom,
    is_mutual_top,
    is_strong_bottom_responsive,
    is_top_responsive,
)
from .solvers import connected_component, deviation_dynamics, find_gdot_maximal_IR, lemma1_check, top_covering
from .stability import (
    Concept,
    DeviationWitness,
    StabilityVerdict,
    check,
    check_hierarchy,
    is_core_stable,
    is_individually_rational,
    is_individually_stable,
    is_nash_stable,
    is_pareto_optimal,
    is_perfect,
    is_strict_core_stable,
    is_strict_strong_nash_stable,
    is_strong_individually_stable,
    is_strong_nash_stable,
    reachable,
)

__version__ = "0.1.0"

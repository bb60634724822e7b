"""Token swapping and permutation routing via matchings.

Exact solvers for lollipop and star-path graphs, a +1 approximation for
routing on paths, polynomial 2-step decision procedures, certified hardness
instance generators, and an exhaustive oracle that verifies all of them at
desk scale.
"""

from .core import (
    Graph, Instance, SwapSequence, ParallelSwapSequence, VerifyResult,
    apply_swap, apply_parallel_swap, apply_sequence, apply_parallel_sequence,
    distances, identity, inverse_of, make_family, move_count, orbits, verify,
    lollipop_graph, starpath_graph, path_graph, cycle_graph, complete_graph,
    detect_family,
)
from .oracle import (
    BudgetExceededError, ts_oracle, rt_oracle, rt_colored_oracle,
    ts_all, rt_all, count_two_step, two_step_solutions, all_matchings,
)
from .lollipop import solve_lollipop
from .lollipop import potential as lollipop_potential
from .starpath import solve_starpath
from .starpath import potential as starpath_potential
from .pathroute import (
    ap_solve, oe_transform, is_reasonable, endpoint_schedule, endpoint_swap_config,
)
from .twostep import decide_rt2, decide_rt2_2colored, orbit_pair_feasible
from .reductions import (
    ThreeDMInstance, SepSatInstance, SepSatReduction, ReductionOutput, Certificate,
    reduce_3dm_ts, map_3dm_solution, audit_3dm_map,
    reduce_3sat_sepsat, find_separation,
    reduce_sepsat_rvm, map_assignment_rvm,
    reduce_sepsat_rvm_deg3, map_assignment_rvm_deg3,
    reduce_sepsat_2c3, map_assignment_2c3,
    reduce_sepsat_3c2, map_assignment_3c2,
    build_counting_gadget, structured_gadget_solutions, perfect_matchings,
    parse_dimacs, dump_dimacs, satisfying_assignment,
)

__version__ = "0.1.0"

"""qualrank: order alternatives under qualitative, possibly incomplete
preferences.

Intra-attribute preferences are strict partial orders (total for ordinal and
numeric domains, interval orders for range-valued ones); relative importance
of attributes is a DAG. The engine computes the witness-based dominance
relation over alternatives, validates its order-theoretic properties, and
diagnoses quantitative baseline rankings against it.
"""

from .errors import (
    DomainMismatchError,
    NotPartialOrderError,
    ParseError,
    ProblemValidationError,
    QualrankError,
    ScalarizationError,
    UnknownAlternativeError,
    WeightsError,
)
from .model import (
    Alternative,
    Attribute,
    Direction,
    Finding,
    Interval,
    Level,
    Number,
    Numeric,
    Ordinal,
    OrderingOutcome,
    Problem,
    Range,
    ValidationReport,
    as_value,
    build_problem,
    validate_problem,
    value_compare,
)
from .orders import (
    Classification,
    IntervalOrderResult,
    LinearExtensionResult,
    OrderClass,
    Relation,
    SpoResult,
    check_spo,
    classify,
    is_interval_order,
    is_linear_extension,
    transitive_closure,
    transitive_reduction,
)
from .dominance import (
    DominanceEdge,
    DominanceGraph,
    Explanation,
    PreparedProblem,
    RankLayers,
    Witness,
    dominance_graph,
    dominates,
    explain,
    layered_ranking,
    maximal_set,
    naive_dominates,
    prepare,
)
from .diagnostics import (
    AgreementMetrics,
    ConsistencyReport,
    ReversalReport,
    WeightVector,
    WeightedRanking,
    agreement_metrics,
    consistency_report,
    rank_reversal_probe,
    weighted_sum_rank,
)
from .serialize import (
    export_dot,
    parse_problem,
    parse_weights,
    problem_to_dict,
    serialize_problem,
)

__version__ = "0.1.0"

"""Hamilton cycles or low-toughness separators for connected chordal graphs.

For any connected chordal graph on at least three vertices the pipeline
either constructs a verified Hamilton cycle or produces a verified
separating set S with 10 * c(G - S) > |S|, certifying that the graph's
toughness is below 10.
"""

from .errors import (
    CapExceededError,
    ChordalHamError,
    ConstructionError,
    DisconnectedError,
    InputError,
    InvariantError,
    KonigError,
    NotChordalError,
    ParameterError,
    ParseError,
    PathDiagnostic,
    RepresentationError,
    TooSmallError,
    WitnessError,
)
from .generators import GeneratorSpec, generate_chordal
from .graphio import parse_graph, render_graph
from .graphs import (
    Graph,
    HoleWitness,
    PerfectEliminationOrder,
    components_after_removal,
    is_chordal,
    is_connected,
    maximal_cliques,
)
from .hamilton import (
    PathResult,
    PipelineResult,
    PipelineStructures,
    build_structures,
    construct_hamilton_cycle,
    construct_hamilton_path,
    run_pipeline,
)
from .oracles import (
    hamilton_cycle_oracle,
    hamilton_path_oracle,
    matching_number_oracle,
    vertex_cover_oracle,
)
from .overspan import (
    NuTauCertificate,
    OverspanFamily,
    OverspanItem,
    UnionGraph,
    build_overspan_family,
    find_violating_subfamily,
    nu_tau_konig,
    union_subfamily,
)
from .sdr import Sdr, find_sdr
from .toughness import Toughness, toughness
from .treerep import (
    BaseTree,
    IndependentPathSystem,
    Tree,
    TreeRepresentation,
    build_base_tree,
    build_tree_representation,
    select_independent_set,
)
from .witness import (
    EnclosingPair,
    WitnessSeparator,
    check_enclosing_disconnection,
    enclosing_pair,
    extract_separator,
    tree_component_bound,
)

__version__ = "0.1.0"

"""Digital Jordan curves on the cell complexes of plane tilings."""

from .cells import CellRef, Kind, E, F, V, parse_cell
from .curves import (
    ClosedCurveReport,
    Connectivity,
    CurveKind,
    OpenCurveReport,
    PreconditionError,
    RosenfeldReport,
    classify_closed,
    classify_open,
    edge_adjacent,
    faces_connected,
    is_edge_jordan,
    is_open_curve,
    is_vertex_jordan,
    is_well_behaved,
    open_interior_vertex_check,
    rosenfeld_report,
    vertex_adjacent,
    well_behaved_interior_face,
    well_behaved_witness,
)
from .generators import build_hexagonal_window, build_square_window, build_triangular_window, build_window
from .jordan import (
    ComplementError,
    ComplementSplit,
    CurveVerdict,
    MarginError,
    NotJordanError,
    Reason,
    StructureError,
    curve_order,
    interior_adjacency_check,
    is_jordan_curve,
    is_jordan_curve_by_deletion,
    jordan_complement,
    local_adjacency_cycle,
)
from .render import RenderError, render_svg
from .sampler import CurveSampler, SampleKind, SamplerConfig, SamplerExhausted, sample_curves
from .space import (
    CellSet,
    DigitalSpace,
    adjacency_set,
    boundary_set,
    closure_of,
    closure_set,
    components,
    connectedness_graph,
    interior_set,
    is_digital_arc,
    is_digital_path,
    smallest_neighborhood,
)
from .tiling import (
    IncompleteCellError,
    TilingError,
    TilingWindow,
    UnknownCellError,
    ValidationReport,
    WindowTooSmallError,
    delta,
    star_complete,
    validate_tiling,
)
from .tilingio import CurveDocument, dump_curve, dump_tiling, load_curve, load_tiling, read_tiling

__version__ = "0.1.0"

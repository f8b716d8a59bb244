"""Edge numbers of knot and link diagrams.

A diagram is cut into edges by vertices placed between crossing passages.
The cut is a cycle presentation when no edge crosses itself and any two
edges that meet do so consistently over or under.  This package enumerates
such cuts, finds the least number of edges a diagram admits, builds the
over/under digraph of a presentation, and certifies nontriviality with an
exact Jones polynomial.
"""

from .census import (
    AnalysisOptions,
    CensusError,
    CensusRecord,
    analyze,
    load_census,
    rows_to_csv,
    run_census,
    scan_conjecture,
    verify_propositions,
)
from .diagram import Diagram, DiagramError, Passage, Role, mirror, parse_diagram, parse_gauss, parse_pd, writhe
from .digraph import OverDigraph, build, classify, sources_sinks, to_dot
from .invariants import (
    bracket,
    crossing_number_certificate,
    edge_number_bounds,
    is_alternating,
    is_reduced,
    jones,
    nontriviality_certificate,
    overpass_count,
)
from .laurent import Laurent
from .presentation import (
    CutSet,
    CyclePresentation,
    check_presentation,
    enumerate_cut_sets,
    enumerate_presentations,
    is_descending_rotation,
    merge_cut,
    merge_obstruction,
    min_presentation,
    overpass_cut_set,
)

__version__ = "0.1.0"

"""Edge flips in combinatorial planar triangulations.

Removing separating triangles within floor((3n - 9) / 5) flips, flipping
4-connected triangulations to the canonical two-dominant-vertex form, and
brute-force oracles for small n.
"""

from .canonicalize import (canonical_budget, distance_budget,
                           flip_distance_via_canonical, is_canonical,
                           make_dominant_in_side, to_canonical)
from .embedding import (FlipRecord, FlipSequence, Triangulation, build,
                        canonical_code, deserialize, from_faces, isomorphism,
                        serialize)
from .errors import *  # noqa: F401,F403
from .four_connect import (ChargeLedger, flip_bound, is_4connected,
                           make_4_connected)
from .generators import gen_canonical, gen_random, gen_sierpinski, gen_stacked
from .hamiltonian import (CycleDecomposition, hamiltonian_cycle_through,
                          pick_apex_pair, validate_decomposition,
                          validate_whitney_path, whitney_path)
from .kernels import BACKEND
from .septri import SeparatingTriangle, scan

__version__ = "0.1.0"

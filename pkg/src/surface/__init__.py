"""
Surface models: nodal geometry, Weyl reduction, effectivity and nodal cycles.
"""
from src.surface.effectivity import RootSpanSearch, is_effective, root_representations
from src.surface.isotropic import isotropic_companion
from src.surface.model import SurfaceModel, validate
from src.surface.nodal import find_nodal_cycle_mod2, is_nodal_cycle
from src.surface.reduction import ReductionStep, ReductionTrace, is_nef, weyl_reduce

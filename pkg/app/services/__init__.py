# Services package
from .analysis import DominanceMode, EliminationStep, EliminationTrace, EquilibriumReport
from .scenarios import ArmsRaceModel, DynamicsTrajectory

# Package adaptive: acréscimo eficiente de features
from .cost import UpdateCost, update_cost_report
from .update import AdaptiveState, extend, penrose_tolerance

__all__ = ["AdaptiveState", "UpdateCost", "extend", "penrose_tolerance", "update_cost_report"]

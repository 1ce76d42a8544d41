class WorkbenchError(Exception):
    """Base class for outcomes that are neither input errors nor bugs."""


class BudgetExhausted(WorkbenchError):
    def __init__(self, *, parameter: str, budget: int, nodes_explored: int):
        self.parameter = parameter
        self.budget = budget
        self.nodes_explored = nodes_explored
        super().__init__(f"budget exhausted: {parameter} search hit the node cap of {budget} after {nodes_explored} nodes")


class CeilingExceeded(WorkbenchError):
    def __init__(self, *, order: int, ceiling: int):
        self.order = order
        self.ceiling = ceiling
        super().__init__(f"graph order {order} exceeds the enumeration ceiling of {ceiling}")

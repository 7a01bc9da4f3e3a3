"""Domain layer: graph value objects, models, interfaces and errors."""

"""Built-in scenario files (*.scn) shipped with the package."""

// placeholder, filled in by the cli module

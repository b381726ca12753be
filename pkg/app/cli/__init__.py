# Command-line layer: command implementations, rendering and error handling

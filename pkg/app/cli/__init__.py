"""Graph files, reports, diagrams and the command-line entry point."""

"""Command-line surface: argparse subcommands producing structured JSON reports."""

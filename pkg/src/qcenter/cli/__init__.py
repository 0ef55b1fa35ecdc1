"""Command-line front end: expression parser, formatting and the ``qcenter`` entry point."""

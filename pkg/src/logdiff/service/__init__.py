"""Service subpackage: HTTP API, log store, sessions, CLI."""

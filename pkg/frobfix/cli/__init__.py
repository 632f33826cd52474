"""Command-line front end: JSON documents in, reports out."""

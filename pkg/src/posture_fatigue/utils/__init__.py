"""Configuration, format detection and file naming helpers."""

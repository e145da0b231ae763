"""Logging support shared by the library and the command line."""

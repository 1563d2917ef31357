"""Operational scripts for the Enriques toolkit."""

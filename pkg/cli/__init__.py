"""
CLI commands for the generalized Clifford algebra workbench.

Run commands using: python -m cli.<command>, or all of them through gca_cli.py.
"""

#!/usr/bin/env python3
"""Print the exact delta tables for the S3 Cayley graph and the 6-wheel,
with the reference comparison, plus the catalog spectrum reproduction."""

from mnhd.cli import reproduce_tables

if __name__ == "__main__":
    print(reproduce_tables())

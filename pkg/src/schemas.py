"""Pandera schemas for the arithmetic-function tables."""

import pandera.pandas as pa

TABLE_COLUMNS = ["n", "system", "set", "phi_AS", "mu_AS", "h_AS", "k", "c_AS_k"]

arithmetic_table_schema = pa.DataFrameSchema(
    columns={
        "n": pa.Column(int, checks=pa.Check.ge(1), nullable=False, unique=True),
        "system": pa.Column(str, checks=pa.Check.isin(["D", "U", "E"]), nullable=False),
        "set": pa.Column(str, nullable=False),
        "phi_AS": pa.Column(int, checks=pa.Check.ge(0), nullable=False),
        "mu_AS": pa.Column(int, nullable=False),
        # absent when 1 is not in S
        "h_AS": pa.Column("Int64", nullable=True),
        "k": pa.Column(int, checks=pa.Check.ge(0), nullable=False),
        "c_AS_k": pa.Column(int, nullable=False),
    },
    checks=[
        pa.Check(lambda df: (df["c_AS_k"] <= df["phi_AS"]).all(), error="|c_AS(k)| exceeds phi_AS"),
        pa.Check(lambda df: (df["c_AS_k"] >= -df["phi_AS"]).all(), error="|c_AS(k)| exceeds phi_AS"),
    ],
    name="ArithmeticTableSchema",
    strict=True,
    ordered=True,
)

"""Newton-polygon toric resolution of two-variable germs."""

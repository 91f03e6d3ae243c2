"""Verification laboratory for nonnegative Peterson cells, strongly
dominant weight polytopes, and the associated toric models.

Subpackages are organized bottom-up: linalg (exact linear algebra),
rootdata (Cartan catalog and Weyl combinatorics), liealg (Chevalley
bases and highest-weight modules), grouprep (group elements and
minors), peterson (normal-form points and the minor map), polytope
(fan, polytope, face lattice), toric (Cox coordinates and moment map),
verify (seeded suites) and cli (command-line front end).
"""

__version__ = "0.1.0"

"""stonedual: exact arithmetic and Stone-type duality for finite inverse semigroups.

Subpackages by topic:
  words       words, prefix codes, Kraft sums, graphs and paths
  polycyclic  polycyclic inverse monoids and their r-fold matrix variants
  graphisg    graph inverse semigroups
  finitesgp   finite inverse semigroups as multiplication tables, predicates
  filtercomp  filters, tight filters, distributive and Boolean completions
  duality     ultrafilter groupoids, bisection semigroups, classification
  thompson    Cuntz inverse monoid elements and Thompson-Higman tree pairs
  cli         command line front end
"""

__version__ = "0.1.0"

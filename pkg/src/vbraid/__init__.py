"""Virtual braid words, Markov/L-moves, closures to Gauss codes and bracket invariants."""

from .errors import (InvalidInput, MoveNotApplicable, NotAllowed, NotDestabilizable, ParseError,
                     RelationMismatch, ResourceLimitError, StrandMismatch, VBraidError)
from .gauss import (GaussCode, Pass, canonical, close_braid, components, format_gauss,
                    parse_gauss, validate_gauss)
from .gauss_moves import (forbidden_over, forbidden_under, r1_delete, r1_insert, r2_delete,
                          r2_insert)
from .invariants import bracket_braid, bracket_gauss, f_poly, f_poly_braid, odd_writhe
from .morse import braid_morse, evaluate_morse, parse_morse, random_morse, validate_morse
from .moves import (MoveBudget, MoveRecord, conj_real, conj_virtual, destab, enumerate_moves,
                    lmove_classical, lmove_virtual, stab, thread_left, thread_right)
from .poly import LaurentPoly, format_poly, parse_poly
from .search import SearchBudget, SearchResult, canonical_key, equiv_within
from .words import (BraidWord, Generator, Kind, Permutation, apply_relation, concat, embed,
                    free_reduce, invert, parse_word, print_word, random_word,
                    underlying_permutation, writhe)

__version__ = "0.1.0"

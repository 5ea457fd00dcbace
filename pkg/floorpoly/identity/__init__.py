""" The product identity for x_0 x_1 ... x_{n-1}: terms, evaluation and the cancellation certificate. """
from .certificate import CancellationCertificate, ExpansionGroup, cancellation_certificate
from .expansion import ExpansionTerm, expand_cut_set
from .identity import (Identity, chain_product, cubic_identity, eval_identity, generate_terms,
                       verify_arbitrary_bracket)
from .term_expr import ChainCache, TermExpr, render_chain, term_count

""" Nested floor chains X^{a:b}, power chains x^{:k} and the derived sequences a_k, b_k. """
from .ab_sequence import ABSeq, ab_seq
from .chain_input import ChainInput, Number
from .evaluation import Bracket, certified_floor, eval_chain, floor_bracket, fractional_part, power_chain

from dataclasses import replace

from negtrans.formula import Neg, count_connectives, free_vars, is_propositional, subformulas
from negtrans.generator import GeneratorConfig, gen_formulas, symbol_count


def test_same_seed_same_formulas():
    cfg = GeneratorConfig(seed=5, propositional=False)
    assert gen_formulas(cfg, 30) == gen_formulas(cfg, 30)
    assert gen_formulas(cfg, 30) != gen_formulas(replace(cfg, seed=6), 30)


def test_quantified_formulas_are_closed():
    formulas = gen_formulas(GeneratorConfig(seed=3, propositional=False), 100)
    assert all(not free_vars(f) for f in formulas)
    assert any(not is_propositional(f) for f in formulas)


def test_default_weights_are_negation_free():
    formulas = gen_formulas(GeneratorConfig(seed=2), 100)
    assert all(is_propositional(f) for f in formulas)
    assert not any(isinstance(g, Neg) for f in formulas for g in subformulas(f))


def test_negation_weight():
    cfg = GeneratorConfig(seed=2, weights={"and": 1, "or": 1, "imp": 1, "neg": 3})
    formulas = gen_formulas(cfg, 50)
    assert any(isinstance(g, Neg) for f in formulas for g in subformulas(f))


def test_symbol_count(f):
    g = f("(P & Q) -> forall x. R(x)")
    assert symbol_count(g) == 3 == count_connectives(g).total

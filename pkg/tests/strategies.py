"""Hypothesis strategies that drive the library's seeded generators."""
import random

from hypothesis import strategies as st

from cauchyden.generators import (GenConfig, gen_category, gen_cd_functor, gen_functor,
                                  gen_monoid_hom, gen_preorder_map, gen_quant_category,
                                  gen_quant_functor, gen_metric_map, gen_thin_functor)

CFG = GenConfig()
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _drawn(gen, cfg=CFG):
    return seeds.map(lambda s: gen(random.Random(s), cfg))


categories = _drawn(gen_category)
functors = st.one_of(_drawn(gen_functor), _drawn(lambda r, c: gen_cd_functor(r, c)[0]))
cd_functors = _drawn(lambda r, c: gen_cd_functor(r, c)[0])
monoid_homs = _drawn(gen_monoid_hom)
preorder_maps = _drawn(gen_preorder_map)
thin_functors = _drawn(gen_thin_functor)
quant_categories = _drawn(gen_quant_category)
quant_functors = st.one_of(_drawn(gen_quant_functor), _drawn(gen_metric_map))

use boolcodes::boolfun::anf;
use boolcodes::defining_set::{boolean_from_code, code_from_defining_set, spectral_weight_distribution};
use boolcodes::{BitRow, BooleanFunction, DefiningSet, Field};
use proptest::prelude::*;

fn field_and_words() -> impl Strategy<Value = (u32, u32, u32, u32)> {
    (1u32..=16).prop_flat_map(|m| {
        let top = 1u32 << m;
        (Just(m), 0..top, 0..top, 0..top)
    })
}

fn function(max_m: u32) -> impl Strategy<Value = BooleanFunction> {
    (2..=max_m).prop_flat_map(|m| {
        prop::collection::vec(any::<bool>(), 1usize << m).prop_map(move |bits| {
            BooleanFunction::from_table(Field::default_for(m).unwrap(), BitRow::from_bits(&bits)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn field_operations_are_consistent((m, a, b, c) in field_and_words()) {
        let f = Field::default_for(m).unwrap();
        prop_assert_eq!(f.mul_words(a, f.mul_words(b, c)), f.mul_words(f.mul_words(a, b), c));
        prop_assert_eq!(f.mul_words(a, b ^ c), f.mul_words(a, b) ^ f.mul_words(a, c));
        prop_assert_eq!(f.trace_word(a ^ b), f.trace_word(a) ^ f.trace_word(b));
        prop_assert_eq!(f.trace_word(a), f.trace_word(f.square_words(a)));
        if a != 0 {
            prop_assert_eq!(f.mul_words(a, f.inv_words(a).unwrap()), 1);
        }
    }

    #[test]
    fn anf_reproduces_truth_table(f in function(9)) {
        let a = anf(&f);
        for x in 0..(1u32 << f.num_vars()) {
            prop_assert_eq!(a.eval(x), f.eval(x));
        }
    }

    #[test]
    fn spectral_report_counts_all_codewords(f in function(8)) {
        prop_assume!(f.weight() > 0);
        let report = spectral_weight_distribution(&f).unwrap();
        let total: u64 = report.weights.values().sum();
        prop_assert_eq!(total, 1u64 << report.dimension);
        prop_assert_eq!(report.e << report.dimension, 1u64 << f.num_vars());
    }

    #[test]
    fn code_to_function_to_code(f in function(8)) {
        // A support containing 0 gives a zero column, which has no f_C.
        prop_assume!(f.weight() > 0 && !f.eval(0));
        let code = code_from_defining_set(&DefiningSet::from_support(&f).unwrap());
        let g = boolean_from_code(&code).unwrap();
        prop_assert_eq!(g.weight(), f.weight());
        prop_assert_eq!(g.num_vars() as usize, code.dimension());
    }
}

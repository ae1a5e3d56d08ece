macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(cohomology_table_example, "cohomology_table.rs", cohomology_table_example_runs);
example!(twist_intervals_example, "twist_intervals.rs", twist_intervals_example_runs);
example!(regularity_example, "regularity.rs", regularity_example_runs);
example!(acm_example, "acm.rs", acm_example_runs);
example!(koszul_example, "koszul.rs", koszul_example_runs);
example!(splitting_criteria_example, "splitting_criteria.rs", splitting_criteria_example_runs);
example!(audit_example, "audit.rs", audit_example_runs);

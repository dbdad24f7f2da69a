//! From defining polynomial to certified bound, checked against class groups
//! computed independently from binary quadratic forms.

use genbound::criteria::{self, FieldShape, TestConfig};
use genbound::field::NumberField;
use genbound::quadratic::{class_group, enumerate_fundamental_discriminants};

/// Minimal polynomial of `(d + sqrt d)/2` shifted to have discriminant `d`.
fn quadratic_field(d: i64) -> NumberField {
    let coeffs = if d % 4 == 0 { vec![-d / 4, 0, 1] } else { vec![(1 - d) / 4, -1, 1] };
    NumberField::from_coefficients(&coeffs).unwrap()
}

#[test]
fn exact_bounds_generate_quadratic_class_groups() {
    for d in enumerate_fundamental_discriminants(300) {
        let k = quadratic_field(d.value());
        assert_eq!(k.field_disc().unwrap().to_string(), d.value().to_string());
        let log_disc = k.log_abs_disc().unwrap();
        let report = criteria::minimal_t_exact(&k, 4.0 * log_disc * log_disc).unwrap();
        let generation = class_group(d).generated_by_primes_up_to(report.t_bound);
        assert!(generation.generates, "d = {}: T = {} does not generate", d.value(), report.t_bound);
    }
}

#[test]
fn exact_bound_never_exceeds_generic_bound() {
    for coeffs in [&[5i64, 0, 1][..], &[-1, -1, 0, 1], &[1, 0, 0, 0, 1], &[-2, 0, 0, 1]] {
        let k = NumberField::from_coefficients(coeffs).unwrap();
        let log_disc = k.log_abs_disc().unwrap();
        let exact = criteria::minimal_t_exact(&k, 4.0 * log_disc * log_disc).unwrap();
        let cfg = TestConfig::new(exact.t_bound, exact.c_used).unwrap();
        assert!(criteria::eval_exact(&k, &cfg).unwrap().passed);
        let shape = FieldShape::from_field(&k).unwrap();
        assert!(exact.t_bound <= 4.0 * shape.log_disc * shape.log_disc);
    }
}

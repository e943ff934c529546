use proptest::prelude::*;
use sp4kl_core::exact::{frac, int, Scalar};
use sp4kl_core::lattice::LatticeDesc;
use sp4kl_core::spectral::*;

fn r(n: i64, d: i64) -> Scalar {
    frac(n, d)
}

#[test]
fn langlands_to_spectral() {
    let mu = spectral_from_langlands(int(2), int(1));
    assert_eq!((mu.mu1.re.clone(), mu.mu2.re.clone()), (r(3, 2), r(1, 2)));
    assert_eq!(sigma_of(&mu), r(3, 2));
    let mu = spectral_from_langlands(int(0), int(0));
    assert!(mu.is_tempered());
    assert_eq!(sigma_of(&mu), int(0));
    let mu = spectral_from_langlands(int(1), int(-1));
    assert_eq!((mu.mu1.re, mu.mu2.re), (int(0), int(1)));
}

#[test]
fn transfer_and_sigma_examples() {
    let mu = spectral_from_langlands(int(2), int(1));
    let t = gl4_transfer(&mu);
    let res: Vec<Scalar> = t.iter().map(|c| c.re.clone()).collect();
    assert_eq!(res, vec![r(3, 2), r(1, 2), r(-1, 2), r(-3, 2)]);
    // Saito-Kurokawa at infinity: Re μ = (β, 1/2), β < 1/2
    let sk = SpectralParameter::new(
        ComplexRational::new(r(1, 5), int(3)),
        ComplexRational::real(r(1, 2)),
    );
    assert_eq!(sigma_of(&sk), r(1, 2));
    let q = SpectralParameter::new(
        ComplexRational::real(r(1, 2)),
        ComplexRational::real(r(-1, 2)),
    );
    assert_eq!(sigma_of(&q), r(1, 2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn transfer_is_self_dual(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20, e in -9i64..9, f in -9i64..9) {
        let mu = SpectralParameter::new(ComplexRational::new(r(a, b), int(e)), ComplexRational::new(r(c, d), int(f)));
        let t = gl4_transfer(&mu);
        let mut pos: Vec<(Scalar, Scalar)> = t.iter().map(|z| (z.re.clone(), z.im.clone())).collect();
        let mut neg: Vec<(Scalar, Scalar)> = t.iter().map(|z| (-&z.re, -&z.im)).collect();
        pos.sort();
        neg.sort();
        prop_assert_eq!(pos, neg);
        prop_assert_eq!(sigma_of(&mu) == int(0), mu.is_tempered());
    }

    #[test]
    fn assembly_is_monotone(g in 0u64..1000, y in 0u64..1000, p in 0u64..1000, q in 2u64..50, s1 in 0i64..=96, s2 in 0i64..=96) {
        let l = LatticeDesc::paramodular(q);
        let inputs = CountingInputs { general: g, yoshida: y, gl2: p };
        let (lo, hi) = (s1.min(s2), s1.max(s2));
        let a = assemble_counting(l, r(lo, 64), int(1), inputs).unwrap();
        let b = assemble_counting(l, r(hi, 64), int(1), inputs).unwrap();
        prop_assert!(a.total >= b.total);
        prop_assert_eq!(a.columns.iter().map(|c| c.count).sum::<u64>(), a.total);
        prop_assert_eq!(a.column(ArthurType::B) + a.column(ArthurType::Q), 0);
        prop_assert_eq!(assemble_counting(l, r(3, 2), int(1), inputs).unwrap().total, 1);
        if hi > 32 {
            for t in [ArthurType::G, ArthurType::Y, ArthurType::P, ArthurType::B, ArthurType::Q] {
                prop_assert_eq!(b.column(t), 0);
            }
        }
    }
}

#[test]
fn assembly_examples() {
    let l = LatticeDesc::paramodular(7);
    let inputs = CountingInputs {
        general: 40,
        yoshida: 9,
        gl2: 5,
    };
    let a = assemble_counting(l, r(3, 5), int(1), inputs).unwrap();
    assert_eq!(a.total, 1);
    let a = assemble_counting(l, r(1, 2), int(1), inputs).unwrap();
    assert_eq!(a.total, 6);
    assert_eq!(a.column(ArthurType::P), 5);
    let a = assemble_counting(l, r(1, 10), int(1), inputs).unwrap();
    assert_eq!(a.total, 55);
    let a = assemble_counting(l, r(9, 22), int(1), inputs).unwrap();
    assert_eq!((a.column(ArthurType::G), a.column(ArthurType::Y)), (40, 0));
    assert!(matches!(
        assemble_counting(l, r(8, 5), int(1), inputs),
        Err(SpectralError::SigmaOutOfRange(_))
    ));
    assert!(matches!(
        assemble_counting(l, r(-1, 5), int(1), inputs),
        Err(SpectralError::SigmaOutOfRange(_))
    ));
    assert!(matches!(
        assemble_counting(LatticeDesc::full(), r(1, 2), int(1), inputs),
        Err(SpectralError::UnsupportedLattice(_))
    ));
}

#[test]
fn packet_rules() {
    let l = LatticeDesc::paramodular(7);
    assert_eq!(
        paramodular_packet_contribution(ArthurType::B, l, None),
        Ok(PacketRule::Zero)
    );
    assert_eq!(
        paramodular_packet_contribution(ArthurType::Q, l, None),
        Ok(PacketRule::Zero)
    );
    assert_eq!(
        paramodular_packet_contribution(ArthurType::G, l, None),
        Ok(PacketRule::GenericCount)
    );
    assert_eq!(
        paramodular_packet_contribution(ArthurType::F, l, None),
        Ok(PacketRule::ResidualPoint)
    );
    assert_eq!(
        paramodular_packet_contribution(ArthurType::P, l, None),
        Err(SpectralError::MissingInput)
    );
    assert!(paramodular_packet_contribution(ArthurType::B, LatticeDesc::full(), None).is_err());
    assert!(
        paramodular_packet_contribution(ArthurType::B, LatticeDesc::paramodular(1), None).is_err()
    );

    let good = |conductor| SaitoKurokawaDatum {
        conductor,
        root_number_plus: true,
        character_trivial: true,
    };
    let l = LatticeDesc::paramodular(49);
    assert_eq!(
        paramodular_packet_contribution(ArthurType::P, l, Some(&good(1))),
        Ok(PacketRule::Dimension(1))
    );
    assert_eq!(type_p_dimension(7, &good(7)), 0);
    assert_eq!(type_p_dimension(7, &good(1)), 0);
    assert_eq!(type_p_dimension(9 * 25, &good(1)), 1);
    assert_eq!(type_p_dimension(16, &good(1)), 2);
    assert_eq!(type_p_dimension(49, &good(5)), 0);
    assert_eq!(
        type_p_dimension(
            49,
            &SaitoKurokawaDatum {
                root_number_plus: false,
                ..good(1)
            }
        ),
        0
    );
    assert_eq!(
        type_p_dimension(
            49,
            &SaitoKurokawaDatum {
                character_trivial: false,
                ..good(1)
            }
        ),
        0
    );
    assert_eq!(type_p_count(49, &[good(1), good(7), good(49)]), 1);
}

#[test]
fn arthur_types() {
    let orders: Vec<u8> = ArthurType::ALL
        .iter()
        .map(|t| t.component_group_order())
        .collect();
    assert_eq!(orders, vec![1, 2, 1, 2, 2, 1]);
    assert!(ArthurType::P.shape().contains("ν(2)"));
    assert!(ArthurType::F.shape().contains("ν(4)"));
}

#[test]
fn cusp_form_dimensions() {
    // small known dimensions of S_k(Γ0(N))
    assert_eq!(dim_cusp_forms(1, 12), 1);
    assert_eq!(dim_cusp_forms(1, 24), 2);
    assert_eq!(dim_cusp_forms(11, 2), 1);
    assert_eq!(dim_cusp_forms(37, 2), 2);
    assert_eq!(dim_cusp_forms(5, 4), 1);
    assert_eq!(dim_cusp_forms(22, 2), 2);
    assert_eq!(dim_newforms(22, 2), 0);
    assert_eq!(dim_newforms(23, 2), 2);
    assert_eq!(dim_newforms(26, 2), 2);
    assert_eq!(dim_newforms(33, 2), 1);
    for n in 1..=10 {
        assert_eq!(dim_cusp_forms(n, 2), 0);
    }
    assert_eq!(gl2_toy_count(33, 2), 2);
}

#[test]
fn newform_decomposition_recovers_full_space() {
    for n in 1..=120u64 {
        for k in [2u64, 4, 6, 12] {
            let rebuilt: u64 = sp4kl_core::arith::divisors(n)
                .into_iter()
                .map(|m| sp4kl_core::arith::tau(n / m) * dim_newforms(m, k))
                .sum();
            assert_eq!(rebuilt, dim_cusp_forms(n, k), "N={n} k={k}");
        }
    }
}

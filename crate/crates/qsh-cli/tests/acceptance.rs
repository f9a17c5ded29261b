//! Acceptance gate: ten independent criteria, each reported on its own
//! PASS/FAIL line. Every criterion either recomputes its expected values
//! from an independent oracle (truncated nested sums, Bernoulli-free hand
//! arithmetic, predicate counts) or checks an algebraic law exhaustively
//! on a finite window. Run with `--nocapture` to see the lines on success;
//! they are always shown on failure.

use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use qsh_cli::parse::parse_element;
use qsh_core::hopf::{Antipode, Eulerian};
use qsh_core::{
    act, char_inverse, check_character, coideal, convolution_product, coproduct, counit,
    fit_character, is_transfer, isomorphism, quasi_shuffle, quasi_shuffle_elem, sample_transfer,
    scheme_value, transfer_between, zeta_depth1, Alphabet, Element, Rat, SchemeName,
    TensorElement, Window, Word,
};

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// All words of length at most `max_len` over the letters `lo..=hi`.
fn words_over(lo: i64, hi: i64, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &layer {
            for k in lo..=hi {
                let mut w = prefix.clone();
                w.push(k);
                out.push(Word::new(w.clone()));
                next.push(w);
            }
        }
        layer = next;
    }
    out
}

// ---------------------------------------------------------------- criterion 1

fn fixture_exactness() {
    let w13 = Word::new(vec![-1, -3]);
    let at_one = qsh_core::ems_t_value(&w13)
        .unwrap()
        .eval(&Rat::one())
        .unwrap();
    assert_eq!(at_one, rat(121, 94080), "EMS_t at t=1");
    assert_eq!(scheme_value(SchemeName::Gz, &w13).unwrap(), rat(83, 64512));
    assert_eq!(scheme_value(SchemeName::Ems, &w13).unwrap(), rat(121, 94080));
    assert_eq!(scheme_value(SchemeName::Mp, &w13).unwrap(), rat(1, 840));
}

// ---------------------------------------------------------------- criterion 2

/// Truncated nested sum `S_M(z_{k1}…z_{kn}) = Σ_{M ≥ m1 > … > mn ≥ 1} Π m_i^{-k_i}`,
/// computed without any reference to the quasi-shuffle recursion.
fn nested_sum(word: &[i64], upper: u32) -> Rat {
    match word.split_first() {
        None => Rat::one(),
        Some((&k, rest)) => {
            let mut acc = Rat::zero();
            for m in (1 + rest.len() as u32)..=upper {
                let base = Rat::from_integer(BigInt::from(m));
                let p = if k >= 0 {
                    Rat::one() / num_traits::pow::pow(base, k as usize)
                } else {
                    num_traits::pow::pow(base, (-k) as usize)
                };
                acc += p * nested_sum(rest, m - 1);
            }
            acc
        }
    }
}

fn stuffle_oracle_exhaustive() {
    let words = words_over(-3, 3, 3);
    let mut memo: HashMap<(Vec<i64>, u32), Rat> = HashMap::new();
    let s_m = |w: &Word, m: u32, memo: &mut HashMap<(Vec<i64>, u32), Rat>| -> Rat {
        if (w.len() as u32) > m {
            return Rat::zero();
        }
        memo.entry((w.letters().to_vec(), m))
            .or_insert_with(|| nested_sum(w.letters(), m))
            .clone()
    };
    for (i, u) in words.iter().enumerate() {
        for v in &words[i..] {
            let prod = quasi_shuffle::<Rat>(u, v);
            for m in 1..=6u32 {
                let lhs = s_m(u, m, &mut memo) * s_m(v, m, &mut memo);
                let mut rhs = Rat::zero();
                for (w, c) in prod.iter() {
                    rhs += c * s_m(w, m, &mut memo);
                }
                assert_eq!(lhs, rhs, "S_{m}({u}) S_{m}({v}) != S_{m}({u} * {v})");
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 3

/// Multiset of triple deconcatenations obtained by expanding the left leg.
fn triple_left(w: &Word) -> BTreeMap<(Word, Word, Word), Rat> {
    let mut out = BTreeMap::new();
    for ((a, c), k1) in coproduct::<Rat>(w).iter() {
        for ((x, y), k2) in coproduct::<Rat>(a).iter() {
            let key = (x.clone(), y.clone(), c.clone());
            *out.entry(key).or_insert_with(Rat::zero) += k1.clone() * k2.clone();
        }
    }
    out
}

fn triple_right(w: &Word) -> BTreeMap<(Word, Word, Word), Rat> {
    let mut out = BTreeMap::new();
    for ((a, c), k1) in coproduct::<Rat>(w).iter() {
        for ((x, y), k2) in coproduct::<Rat>(c).iter() {
            let key = (a.clone(), x.clone(), y.clone());
            *out.entry(key).or_insert_with(Rat::zero) += k1.clone() * k2.clone();
        }
    }
    out
}

fn hopf_axioms() {
    let words = words_over(-2, 2, 4);
    // coassociativity on every window word
    for w in &words {
        assert_eq!(triple_left(w), triple_right(w), "coassociativity at {w}");
    }
    // bialgebra compatibility Δ(u∗v) = Δ(u)∗Δ(v) on pairs of combined length ≤ 4
    for (i, u) in words.iter().enumerate() {
        for v in &words[i..] {
            if u.len() + v.len() > 4 {
                continue;
            }
            let lhs = qsh_core::hopf::coproduct_elem(&quasi_shuffle::<Rat>(u, v));
            let mut rhs = TensorElement::zero();
            for ((u1, u2), c1) in coproduct::<Rat>(u).iter() {
                for ((v1, v2), c2) in coproduct::<Rat>(v).iter() {
                    let left = quasi_shuffle::<Rat>(u1, v1);
                    let right = quasi_shuffle::<Rat>(u2, v2);
                    for (a, ca) in left.iter() {
                        for (b, cb) in right.iter() {
                            rhs.add_term(
                                a.clone(),
                                b.clone(),
                                c1.clone() * c2.clone() * ca.clone() * cb.clone(),
                            );
                        }
                    }
                }
            }
            assert_eq!(lhs, rhs, "bialgebra law at ({u}, {v})");
        }
    }
    // antipode: both recursions agree and S⋆id = id⋆S = uε
    let mut ant = Antipode::<Rat>::new();
    for w in &words {
        let s = ant.of(w);
        assert_eq!(s, ant.of_right(w), "left/right antipode at {w}");
        let expected = if w.is_empty() {
            Element::from_word(Word::empty())
        } else {
            Element::zero()
        };
        let mut s_star_id = Element::zero();
        let mut id_star_s = Element::zero();
        for ((a, b), c) in coproduct::<Rat>(w).iter() {
            let sa = ant.of(a);
            let sb = ant.of(b);
            let l = quasi_shuffle_elem(&sa, &Element::from_word(b.clone()));
            let r = quasi_shuffle_elem(&Element::from_word(a.clone()), &sb);
            s_star_id.add_assign(&l.scale(c));
            id_star_s.add_assign(&r.scale(c));
        }
        assert_eq!(s_star_id, expected, "S⋆id at {w}");
        assert_eq!(id_star_s, expected, "id⋆S at {w}");
    }
}

// ---------------------------------------------------------------- criterion 4

fn coideal_closures() {
    for (alphabet, max) in [
        (Alphabet::All, 6),
        (Alphabet::Nonpositive, 0),
        (Alphabet::Negative, -1),
    ] {
        // the letter range is clamped to what the alphabet admits
        let win = Window::new(-6, max, 4, alphabet).unwrap();
        assert!(
            coideal::prefix_closure_check(&win),
            "prefix closure on {win}"
        );
        assert!(
            coideal::contraction_closure_check(&win),
            "contraction closure on {win}"
        );
    }
}

// ---------------------------------------------------------------- criterion 5

fn eulerian_idempotent() {
    let words = words_over(-2, 2, 4);
    let mut eul = Eulerian::<Rat>::new();
    for w in &words {
        let p = eul.pi1(w);
        let pp = eul.pi1_elem(&p);
        assert_eq!(pp, p, "π₁∘π₁ ≠ π₁ at {w}");
    }
    for (i, u) in words.iter().enumerate() {
        for v in &words[i..] {
            if u.is_empty() || v.is_empty() || u.len() + v.len() > 4 {
                continue;
            }
            let prod = quasi_shuffle::<Rat>(u, v);
            assert!(
                eul.pi1_elem(&prod).is_zero(),
                "π₁ does not kill {u} ∗ {v}"
            );
        }
    }
}

// ---------------------------------------------------------------- criterion 6

fn hoffman_isomorphism() {
    // exp∘log = id on all words of length ≤ 4 and the morphism law on pairs
    let win = Window::new(-2, 2, 4, Alphabet::All).unwrap();
    assert!(
        isomorphism::check_hoffman_morphism::<Rat>(&win),
        "Hoffman morphism/inverse on {win}"
    );
    let win = Window::new(-5, 5, 3, Alphabet::All).unwrap();
    assert!(
        isomorphism::log_preserves_n(&win),
        "Hoffman log must preserve the non-singular span on {win}"
    );
}

// ---------------------------------------------------------------- criterion 7

fn transfer_action_trials() {
    let win = Window::new(-4, 0, 3, Alphabet::Nonpositive).unwrap();
    let mut zeta = BTreeMap::new();
    for w in win.enumerate_non_singular() {
        if w.len() == 1 {
            zeta.insert(w.clone(), zeta_depth1(w.letters()[0]).unwrap());
        }
    }
    let alpha = fit_character(&zeta, &win).unwrap();
    assert!(check_character(&alpha));
    for seed in 0..20u64 {
        let phi = sample_transfer::<Rat>(&win, seed).unwrap();
        // (a) sampled elements vanish on the non-singular span
        assert!(is_transfer(phi.as_map()), "seed {seed}: not a transfer");
        // (b) the action fixes the restriction to N
        let beta = act(&phi, &alpha).unwrap();
        for n in alpha.window().enumerate_non_singular() {
            assert_eq!(
                alpha.value(&n).unwrap(),
                beta.value(&n).unwrap(),
                "seed {seed}: action moved the value at {n}"
            );
        }
        // (c) freeness + transitivity: the connecting element is recovered
        let recovered = transfer_between(&beta, &alpha).unwrap();
        let core = *recovered.as_map().window();
        assert!(
            phi.as_map()
                .restrict(&core)
                .unwrap()
                .agrees_with(recovered.as_map(), &core),
            "seed {seed}: transfer_between did not recover φ"
        );
        // (d) closure: φ ⋆ ψ^{-1} stays in the transfer subgroup
        let psi = sample_transfer::<Rat>(&win, seed + 1000).unwrap().into_map();
        let psi_inv = char_inverse(&psi).unwrap();
        let inv_core = *psi_inv.window();
        let prod = convolution_product(
            &phi.as_map().restrict(&inv_core).unwrap(),
            &psi_inv,
        )
        .unwrap();
        assert!(check_character(&prod), "seed {seed}: closure left the group");
        assert!(is_transfer(&prod), "seed {seed}: closure left the subgroup");
    }
}

// ---------------------------------------------------------------- criterion 8

fn forced_partner_consistency() {
    // Independent hand computation. The product rule at (-1, -3) reads
    //   ζ(-1) ζ(-3) = φ(-1,-3) + φ(-3,-1) + ζ(-4),
    // with ζ(-1) = -1/12, ζ(-3) = 1/120, ζ(-4) = 0. Hence
    //   φ(-3,-1) = -1/1440 - φ(-1,-3),
    // and for the input 83/64512:
    //   -1/1440 - 83/64512 = -(64512 + 83·1440)/(1440·64512)
    //                      = -184032/92897280 = -71/35840
    // (cancel 96, then 3, then 3, then 3: 184032 = 96·1917 = 96·27·71,
    //  92897280 = 96·967680 = 96·27·35840).
    assert_eq!(zeta_depth1(-1).unwrap(), rat(-1, 12));
    assert_eq!(zeta_depth1(-3).unwrap(), rat(1, 120));
    assert_eq!(zeta_depth1(-4).unwrap(), Rat::zero());
    assert_eq!(rat(-184032, 92897280), rat(-71, 35840));

    let gz = rat(83, 64512);
    let partner = qsh_core::forced_partner(&gz);
    assert_eq!(partner, rat(-71, 35840));
    // exact involution, spot-checked across a spread of inputs
    for v in [gz, rat(1, 840), rat(121, 94080), Rat::zero(), rat(-7, 3)] {
        assert_eq!(
            qsh_core::forced_partner(&qsh_core::forced_partner(&v)),
            v,
            "involution fails at {v}"
        );
    }
}

// ---------------------------------------------------------------- criterion 9

fn w_dimensions() {
    // depth 1: a single class, spanned by z_1
    let win = Window::new(-3, 3, 2, Alphabet::All).unwrap();
    let (dim, basis) = isomorphism::w_dimension::<Rat>(1, &win).unwrap();
    assert_eq!(dim, 1);
    match basis {
        isomorphism::WBasis::Depth1(letters) => assert_eq!(letters, vec![1]),
        isomorphism::WBasis::Depth2(_) => panic!("depth-1 basis expected"),
    }
    // depth 2: dimension equals the doubly-singular pair count and grows with K
    let mut previous = 0usize;
    for k in 3..=6i64 {
        let win = Window::new(-k, k, 2, Alphabet::All).unwrap();
        let (dim, _) = isomorphism::w_dimension::<Rat>(2, &win).unwrap();
        let oracle = isomorphism::w2_dimension_oracle(&win);
        assert_eq!(dim, oracle, "depth-2 dimension vs oracle at K={k}");
        assert!(dim > previous, "dimension must grow with K (K={k})");
        previous = dim;

        // the comparison against the published bracket set is reported, not
        // enforced: pairs with exactly one singular order (e.g. (1,-2)) are
        // listed there but their brackets are not independent in the quotient
        let diff = isomorphism::w2_basis_diff::<Rat>(&win).unwrap();
        assert!(diff.computed_only.is_empty(), "quotient basis exceeds the published set at K={k}");
        for (a, b) in &diff.paper_only {
            let ab = coideal::is_non_singular(&Word::new(vec![*a, *b])).unwrap();
            let ba = coideal::is_non_singular(&Word::new(vec![*b, *a])).unwrap();
            assert!(
                ab != ba,
                "unexplained discrepancy [z_{a},z_{b}] at K={k}"
            );
            println!(
                "    note: K={k} published bracket [z_{a},z_{b}] dropped (one order non-singular)"
            );
        }
    }
}

// --------------------------------------------------------------- criterion 10

fn qsh(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qsh"))
        .args(args)
        .env_remove("QSH_SEED")
        .output()
        .expect("binary runs")
}

fn cli_determinism() {
    let gz = concat!(env!("CARGO_MANIFEST_DIR"), "/assets/gz.char");
    let mp = concat!(env!("CARGO_MANIFEST_DIR"), "/assets/mp.char");
    let battery: Vec<Vec<&str>> = vec![
        vec!["mul", "[1,-2]", "[0,3]"],
        vec!["shuffle-mul", "[1,-2]", "[0,3]"],
        vec!["coprod", "[1,2,3]"],
        vec!["antipode", "[1,2,3]"],
        vec!["singular", "[5,-1,-2]"],
        vec!["contract", "[1,2,3,4]"],
        vec!["nbasis", "--letters", "-2..2", "--max-len", "2"],
        vec!["hlog", "[1,2,3]"],
        vec!["hexp", "[1,2,3]"],
        vec!["pi1", "[1,2,3]"],
        vec!["wdim", "--depth", "2", "--letters", "-4..4", "--max-len", "2"],
        vec!["char", "check", "--in", gz],
        vec!["char", "conv", "--in", gz, "--in2", mp],
        vec!["char", "inv", "--in", gz],
        vec!["char", "transfer-between", "--in", gz, "--in2", mp],
        vec![
            "char", "sample", "--letters", "-3..0", "--max-len", "2",
            "--alphabet", "nonpositive", "--seed", "7",
        ],
        vec!["scheme", "show", "GZ"],
        vec!["scheme", "partner", "83/64512"],
        vec![
            "verify", "--letters", "-2..0", "--max-len", "2",
            "--alphabet", "nonpositive", "--seed", "5",
        ],
    ];
    for args in &battery {
        let first = qsh(args);
        let second = qsh(args);
        assert!(
            first.status.success(),
            "qsh {args:?} failed: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(first.stdout, second.stdout, "nondeterministic: qsh {args:?}");
    }

    // parse/print round trip on 100 seeded random elements
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    for _ in 0..100 {
        let mut x = Element::<Rat>::zero();
        for _ in 0..=(rng.next_u32() % 5) {
            let len = (rng.next_u32() % 4) as usize;
            let letters: Vec<i64> = (0..len).map(|_| (rng.next_u32() % 13) as i64 - 6).collect();
            let num = BigInt::from((rng.next_u32() % 19) as i64 - 9);
            let den = BigInt::from((rng.next_u32() % 9) as i64 + 1);
            x.add_term(Word::new(letters), Rat::new(num, den));
        }
        let printed = x.to_string();
        let back: Element<Rat> = parse_element(&printed).unwrap();
        assert_eq!(back, x, "round trip failed for `{printed}`");
        assert_eq!(back.to_string(), printed, "non-canonical print of `{printed}`");
    }
}

// ------------------------------------------------------------------- harness

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn())> = vec![
        ("01 fixture-exactness", fixture_exactness),
        ("02 stuffle-oracle", stuffle_oracle_exhaustive),
        ("03 hopf-axioms", hopf_axioms),
        ("04 coideal-closures", coideal_closures),
        ("05 eulerian-idempotent", eulerian_idempotent),
        ("06 hoffman-isomorphism", hoffman_isomorphism),
        ("07 transfer-action", transfer_action_trials),
        ("08 forced-partner", forced_partner_consistency),
        ("09 w-dimensions", w_dimensions),
        ("10 cli-determinism", cli_determinism),
    ];
    let mut failed = Vec::new();
    println!(); // detach from the harness's unterminated "test ..." prefix
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run));
        match &outcome {
            Ok(()) => println!("PASS  {name}"),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                println!("FAIL  {name}: {msg}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn unit_counit_convolution_identity_spot_check() {
    // tiny independent sanity check kept outside the gated list: the counit
    // of a product equals the product of counits
    let u = Word::new(vec![1, -2]);
    let v = Word::letter(3);
    let prod = quasi_shuffle::<Rat>(&u, &v);
    assert_eq!(counit(&prod), Rat::zero());
    let prod = quasi_shuffle::<Rat>(&Word::empty(), &Word::empty());
    assert_eq!(counit(&prod), Rat::one());
}

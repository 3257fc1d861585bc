use quiverdef::deform::{classify_all, classify_dihedral, jet_witness_check, u_bar_word, Verdict};
use quiverdef::quiver::{build_algebra, parse_word, Family, Kind};
use quiverdef::rep::{simple, string_module_str};
use quiverdef::Error;

fn audit(f: Family, d: u32, kind: Kind, y: &str, word: &str, r: usize) -> quiverdef::Result<quiverdef::deform::WitnessAudit> {
    let a = build_algebra(f, d, kind)?;
    let y = string_module_str(&a, y)?;
    jet_witness_check(&y, r, &parse_word(a.quiver(), word)?)
}

#[test]
fn family_one_witnesses() {
    // ηδβ(γηδβ)^2 and δβγ(ηδβγ)^2 at d = 3
    for (y, w) in [
        ("eta*delta*beta", "eta*delta*beta*gamma*eta*delta*beta*gamma*eta*delta*beta"),
        ("delta*beta*gamma", "delta*beta*gamma*eta*delta*beta*gamma*eta*delta*beta*gamma"),
    ] {
        let a = audit(Family::I, 3, Kind::Full, y, w, 3).unwrap();
        assert_eq!((a.period, a.r), (4, 3));
        assert_eq!(a.u_bar_dims.iter().sum::<usize>(), 12);
        assert!(a.surjection_from_projective_cover && a.periodic && a.phi_isomorphism && a.psi_isomorphism);
        assert_eq!(a.ext_u_bar_y, 0);
        assert!(a.dim_law && a.t_action_free);
        assert_eq!(u_bar_word(Family::I, 3, Kind::Full, y).unwrap(), (w.to_string(), 3));
    }
}

#[test]
fn quotient_witness_for_t1() {
    let a = audit(Family::III, 4, Kind::Bar, "e1", "alpha*alpha*alpha", 4).unwrap();
    assert_eq!(a.uniserial_pattern, [1, 1, 1, 1]);
    assert!(a.t_action_free && a.ext_u_bar_y == 0);
}

#[test]
fn hypothesis_failures_name_the_clause() {
    let w = "eta*delta*beta*gamma*eta*delta*beta*gamma*eta*delta*beta";
    assert!(matches!(audit(Family::I, 3, Kind::Full, "eta*delta*beta", w, 1), Err(Error::Hypothesis { clause: 'r', .. })));
    // claimed length does not match the word
    assert!(matches!(audit(Family::I, 3, Kind::Full, "eta*delta*beta", w, 2), Err(Error::Hypothesis { .. })));
    // the wrong top
    assert!(matches!(audit(Family::I, 3, Kind::Full, "delta*beta*gamma", w, 3), Err(Error::Hypothesis { .. })));
    // too short: U/rad^4 is y but the repetition stops early
    let short = "eta*delta*beta*gamma*eta*delta*beta";
    let e = audit(Family::I, 3, Kind::Full, "eta*delta*beta", short, 3).unwrap_err();
    assert!(matches!(e, Error::Hypothesis { .. }), "{e}");
}

#[test]
fn classification_tables() {
    let jets = |f, d| -> Vec<(String, usize)> {
        classify_all(f, d)
            .unwrap()
            .into_iter()
            .filter_map(|r| match r.verdict {
                Verdict::Mod2Jet { r: n } => Some((r.descriptor, n)),
                _ => None,
            })
            .collect()
    };
    assert!(jets(Family::I, 2).is_empty());
    assert!(jets(Family::II, 2).is_empty());
    let one = jets(Family::I, 3);
    assert_eq!(one.len(), 4);
    assert!(one.iter().all(|(_, r)| *r == 3));
    let two = jets(Family::II, 3);
    assert_eq!(two.iter().map(|(w, _)| w.as_str()).collect::<Vec<_>>(), ["delta", "eta"]);
    assert_eq!(jets(Family::III, 4), [("e1".to_string(), 7)]);
}

#[test]
fn dihedral_quotient() {
    let reports = classify_dihedral(4).unwrap();
    let get = |w: &str| reports.iter().find(|r| r.descriptor == w).unwrap();
    assert_eq!(get("e1").verdict, Verdict::Mod2Jet { r: 4 });
    assert_eq!(get("e0").verdict, Verdict::Mod2Trivial);
    assert_eq!(get("e2").verdict, Verdict::Recorded);
    assert_eq!(get("e2").ext_self_dim, 0);
    assert!(reports.iter().all(|r| !r.expected_ring_verified));
    assert!(matches!(classify_dihedral(3), Err(Error::Unsupported(_))));
    let json = serde_json::to_value(get("e1")).unwrap();
    assert_eq!(json["verdict"]["kind"], "mod2-jet");
    assert_eq!(json["verdict"]["r"], 4);
}

#[test]
fn rigid_simple_over_family_one() {
    let a = build_algebra(Family::I, 3, Kind::Full).unwrap();
    let s0 = simple(&a, 0);
    assert_eq!(quiverdef::rep::ext1(&s0, &s0).unwrap(), 0);
}

use quiverdef::atlas::{atlas, completeness_sweep};
use quiverdef::quiver::Family;
use quiverdef::rep::{hom_by_intertwiners, is_isomorphic, radical_series};
use quiverdef::Error;

fn dim_profile(f: Family, d: u32) -> [usize; 4] {
    let mut p = [0; 4];
    for e in atlas(f, d).unwrap() {
        p[e.rep_bar.total_dim() - 1] += 1;
    }
    p
}

#[test]
fn dimension_profiles() {
    assert_eq!(dim_profile(Family::I, 2), [3, 4, 4, 4]);
    assert_eq!(dim_profile(Family::II, 2), [3, 6, 6, 0]);
    assert_eq!(dim_profile(Family::III, 3), [3, 4, 4, 4]);
}

#[test]
fn hybrids() {
    let i = atlas(Family::I, 2).unwrap();
    let hybrids: Vec<_> = i.iter().filter(|e| e.is_hybrid).map(|e| e.rep_bar.total_dim()).collect();
    assert_eq!(hybrids, [3, 3]);
    let ii = atlas(Family::II, 2).unwrap();
    let three: Vec<&str> = ii.iter().filter(|e| e.rep_bar.total_dim() == 3).map(|e| e.descriptor.as_str()).collect();
    assert_eq!(
        three,
        ["beta*kappa^-1", "gamma*delta^-1", "lambda*eta^-1", "gamma^-1*lambda", "beta^-1*eta", "kappa^-1*delta"]
    );
    assert!(ii.iter().filter(|e| e.is_hybrid).all(|e| e.soc_equals_rad));
}

#[test]
fn entries_are_distinct_bricks_matching_their_diagrams() {
    for (f, d) in [(Family::I, 3), (Family::II, 3), (Family::III, 4)] {
        let entries = atlas(f, d).unwrap();
        for e in &entries {
            assert_eq!(radical_series(&e.rep_bar), e.diagram, "{}", e.descriptor);
            assert_eq!(hom_by_intertwiners(&e.rep_bar, &e.rep_bar).unwrap().len(), 1, "{}", e.descriptor);
            assert!(e.problems().is_empty(), "{:?}", e.problems());
        }
        for (i, a) in entries.iter().enumerate() {
            for b in &entries[i + 1..] {
                if a.dims() == b.dims() {
                    assert!(!is_isomorphic(&a.rep_bar, &b.rep_bar).unwrap(), "{} ~ {}", a.descriptor, b.descriptor);
                }
            }
        }
    }
}

#[test]
fn sweep_small_cases() {
    for f in Family::ALL {
        let r = completeness_sweep(f, f.min_d(), 1).unwrap();
        assert_eq!(r.brick_classes.len(), 3);
        assert!(r.brick_classes.iter().all(|c| c.dims.iter().sum::<usize>() == 1));
    }
    let r = completeness_sweep(Family::I, 2, 4).unwrap();
    assert!(r.is_complete());
    assert_eq!(r.matched.len(), 15);
    assert!(matches!(completeness_sweep(Family::I, 2, 7), Err(Error::Unsupported(_))));
}

//! Cache coherence: for sampled keys, a stored element round-trips byte
//! identically and equals a fresh recomputation representationally.

use fusionq::arith::QPool;
use fusionq::cache::{unix_timestamp, Cache, CacheEntry, CacheKey};
use fusionq::fusion::{evaluate_f, evaluate_f_numeric, evaluate_g, FusionSpec};
use fusionq::jsonio::{
    fusion_result_from_json, fusion_result_to_json, to_canonical_json, AnyFusionResult,
    FusionResultJson,
};
use fusionq::tableaux::{Partition, StandardTableau, Variant};

fn sample_results() -> Vec<FusionResultJson> {
    let pool = QPool::default();
    let mut out = Vec::new();
    // 10 keys across shapes, variants, kinds and modes
    let symbolic_f = [
        (vec![2usize, 1], Variant::Hook),
        (vec![2, 1], Variant::Row),
        (vec![2, 2], Variant::Hook),
        (vec![2, 2], Variant::Column),
        (vec![3, 1], Variant::Hook),
        (vec![1, 1, 1], Variant::Row),
    ];
    for (parts, variant) in symbolic_f {
        let shape = Partition::new(parts).unwrap();
        let spec =
            FusionSpec::with_default_direction(StandardTableau::hook_tableau(&shape), variant);
        out.push(fusion_result_to_json(&evaluate_f(&spec).unwrap()));
    }
    for parts in [vec![2usize, 2], vec![3, 1]] {
        let shape = Partition::new(parts).unwrap();
        let tableaux = StandardTableau::standard_tableaux(&shape);
        out.push(fusion_result_to_json(
            &evaluate_g(tableaux.last().unwrap()).unwrap(),
        ));
    }
    for parts in [vec![2usize, 1], vec![2, 2]] {
        let shape = Partition::new(parts).unwrap();
        let spec = FusionSpec::with_default_direction(
            StandardTableau::hook_tableau(&shape),
            Variant::Hook,
        );
        out.push(fusion_result_to_json(
            &evaluate_f_numeric(&spec, &pool).unwrap(),
        ));
    }
    out
}

#[test]
fn cached_entries_match_fresh_recomputation() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    let samples = sample_results();
    assert_eq!(samples.len(), 10);

    for result in &samples {
        let key = CacheKey::for_result(result);
        cache
            .store(&CacheEntry {
                created: unix_timestamp(),
                key: key.clone(),
                result: result.clone(),
            })
            .unwrap();
        let loaded = cache.load(&key).unwrap().expect("entry exists").result;

        // byte-identical round trip
        assert_eq!(
            to_canonical_json(&loaded).unwrap(),
            to_canonical_json(result).unwrap()
        );

        // representational equality against a fresh recomputation
        let fresh = sample_recompute(&loaded);
        assert_eq!(to_canonical_json(&fresh).unwrap(), to_canonical_json(&loaded).unwrap());
    }
}

fn sample_recompute(json: &FusionResultJson) -> FusionResultJson {
    match fusion_result_from_json(json).unwrap() {
        AnyFusionResult::Symbolic(r) => {
            let fresh = match r.kind {
                fusionq::fusion::ElementKind::F => evaluate_f(&r.spec).unwrap(),
                fusionq::fusion::ElementKind::G => evaluate_g(r.spec.tableau()).unwrap(),
            };
            assert_eq!(fresh.element, r.element);
            fusion_result_to_json(&fresh)
        }
        AnyFusionResult::Numeric(r) => {
            let q0 = r.q0.clone().unwrap();
            let fresh = match r.kind {
                fusionq::fusion::ElementKind::F => {
                    fusionq::fusion::evaluate_f_at(&r.spec, &q0).unwrap()
                }
                fusionq::fusion::ElementKind::G => {
                    fusionq::fusion::evaluate_g_at(r.spec.tableau(), &q0).unwrap()
                }
            };
            assert_eq!(fresh.element, r.element);
            fusion_result_to_json(&fresh)
        }
    }
}

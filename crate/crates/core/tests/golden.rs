//! Content hashes of the canonical serializations, pinned after the
//! identities in the acceptance suite were confirmed.

use binv::harness::{compute_target, CacheKey, Target};
use binv::polyring::content_hash;
use binv::Budget;

const GOLDEN: &[(Target, usize, Option<usize>, &str)] = &[
    (Target::H, 1, None, "1df95ff43812b77f6ad8374dfb72cd5df4a0c89cfa9d5b3ced828cf91f4c5fcb"),
    (Target::K, 1, None, "1df95ff43812b77f6ad8374dfb72cd5df4a0c89cfa9d5b3ced828cf91f4c5fcb"),
    (Target::H, 2, None, "3ea14a5c2c9a4065aa3e7c8aa896f914e8fca0650396f4d27407be2cdfa543e7"),
    (Target::K, 2, None, "3ea14a5c2c9a4065aa3e7c8aa896f914e8fca0650396f4d27407be2cdfa543e7"),
    (Target::GTilde, 2, Some(0), "0749c5d49e16d0648d46cb6d5fbe77b96a53cc1e1eac8dbe397cdda50dc17441"),
    (Target::GTilde, 2, Some(1), "66cd0e0452a9ec75ea254fa38bfeb93c61205831b4834813b0877fb3908ebadc"),
    (Target::GTilde, 2, Some(2), "e9a0f3c400934d0fde0af9f56fe5687ff1822c4056cb8f4ec14365e7ac45e1cc"),
    (Target::GTilde, 1, Some(3), "845a458f1307142e115e1f6dabe69d2c33846102435750287dc4cfb0a3add9d1"),
];

#[test]
fn golden_hashes() {
    for &(target, g, d, expected) in GOLDEN {
        let key = CacheKey::new(target, g, d);
        let p = compute_target(&key, &Budget::unlimited()).unwrap();
        assert_eq!(content_hash(&p), expected, "{}", key.file_name());
    }
}

#[test]
fn hashes_survive_thread_count() {
    let key = CacheKey::new(Target::K, 2, None);
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let a = one.install(|| compute_target(&key, &Budget::unlimited())).unwrap();
    let b = four.install(|| compute_target(&key, &Budget::unlimited())).unwrap();
    assert_eq!(content_hash(&a), content_hash(&b));
}

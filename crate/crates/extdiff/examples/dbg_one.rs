use extdiff::diff::{extended_difference, DifferenceOptions};
use extdiff::geometry::{canonicalize, Point2};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_polygon(rng: &mut ChaCha8Rng) -> extdiff::geometry::ConvexPolygon {
    let n = rng.gen_range(3..=10);
    let pts: Vec<Point2> = (0..n)
        .map(|_| Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
        .collect();
    canonicalize(&pts).unwrap()
}

fn main() {
    let opts = DifferenceOptions { m: 128, ..DifferenceOptions::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let a = random_polygon(&mut rng);
    let b = random_polygon(&mut rng);
    let _ = extended_difference(&a, &b, &opts);
}

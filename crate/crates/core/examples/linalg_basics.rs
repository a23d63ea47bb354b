//! Exact linear algebra over ℚ and 𝔽_p: rank, kernels, affine solves and
//! the action of permutations on tensor powers.

use opcheck::linalg::{coinvariants, perm_on_tensor_power, solve_affine, LinearMap, Permutation};
use opcheck::{FieldSpec, Result, Scalar};

fn show(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn main() -> Result<()> {
    for field in [FieldSpec::Rationals, FieldSpec::prime(3)?] {
        let a = LinearMap::from_i64(field, 3, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])?;
        let kernel: Vec<String> = a.kernel().iter().map(|v| show(v)).collect();
        println!("over {field}: rank {}, kernel spanned by {}", a.rank(), kernel.join(" "));

        let b = a.apply(&[field.one(), field.zero(), field.one()])?;
        if let Some((x, kernel)) = solve_affine(&a, &b) {
            println!("  a·x = {} solved by x = {} plus {} kernel directions", show(&b), show(&x), kernel.len());
        }
    }

    // σ = (1 2) swaps the factors of V ⊗ V; the coinvariants are Sym²(V)
    let q = FieldSpec::Rationals;
    let swap = perm_on_tensor_power(q, &Permutation::adjacent(2, 0), 3);
    let sym = coinvariants(q, 9, &[swap])?;
    println!("dim Sym²(ℚ³) = {}", sym.dim);
    Ok(())
}

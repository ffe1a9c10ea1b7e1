//! Writing, reading and scaling instances with fractional data.

use knapsack_lab::harness::{random_instance, ratio_trap};
use knapsack_lab::{exact_opt, KnapsackInstance, Rational};

fn main() -> knapsack_lab::Result<()> {
    let trap = ratio_trap(8, Rational::new(1, 2))?;
    let text = trap.to_text();
    print!("{text}");
    let back = KnapsackInstance::parse(&text)?;
    assert_eq!(back, trap);

    let handwritten = "# three items\n3\n5/2\n3 1/2\n4 2/3\n1 3/2\n";
    let inst: KnapsackInstance = handwritten.parse()?;
    let opt = exact_opt(&inst)?;
    println!(
        "handwritten: OPT = {} at {} via {:?}",
        opt.value, opt.witness, opt.method
    );

    let rand = random_instance(6, 20, 20, Rational::new(2, 5), 3)?;
    println!(
        "random instance ratios: {:?}",
        rand.ratios()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
    );
    Ok(())
}

//! Independent families of finite-type sequences covering given inputs.

use semigroup_cm::lazard::{adjoin_closure, extend_mixed_traced, resolve, FinSeq, SupportPattern};

fn show(label: &str, members: &[FinSeq]) {
    let m: Vec<String> = members.iter().map(|s| s.to_string()).collect();
    println!("{label}: {}", m.join("  "));
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let support = SupportPattern::above(1);
    let betas: Vec<FinSeq> = vec!["(2,1|1)".parse()?, "(0,3|2)".parse()?];

    // alpha = 4 beta_1 - beta_2 lies in the span but not the cone
    let alpha: FinSeq = "(8,1|2)".parse()?;
    let f = resolve(&betas, &alpha, &support)?;
    show("resolve", f.members());
    for v in betas.iter().chain([&alpha]) {
        let c: Vec<String> = f.cone_coordinates(v).unwrap().iter().enumerate().map(|(k, x)| format!("{x}*m{}", k + 1)).collect();
        println!("  {v} = {}", c.join(" + "));
    }

    let f = adjoin_closure(&["(1,2|1)".parse()?, "(3,1|1)".parse()?, "(4,3|2)".parse()?], &support)?;
    show("adjoin", f.members());

    // almost non-negative: finitely many negative entries
    let mixed: FinSeq = "(-1,2,5|1)".parse()?;
    let (f, route) = extend_mixed_traced(&betas, &mixed, &support)?;
    show(&format!("extend ({route:?})"), f.members());
    Ok(())
}

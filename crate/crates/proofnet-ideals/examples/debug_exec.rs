use proofnet_ideals::netideal::*;
use proofnet_ideals::proofnet::*;
use proofnet_ideals::verify::*;

fn main() {
    let nets = corpus(20_240_901, 100, 8, 40);
    let case = &nets[7];
    let net = &case.net;
    println!("net: {}", case.name);
    println!("{}", net.to_json());
    let paths = persistent_paths(net).unwrap();
    let names = variable_names(net);
    for (i, p) in paths.paths.iter().enumerate() {
        let named: Vec<String> = p.iter().map(|v| format!("{}={}", names[v], v)).collect();
        println!("path {i}: {}", named.join(" "));
        let above: Vec<bool> = p.iter().map(|v| above_conclusion(net, *v)).collect();
        println!("  above-conclusion: {above:?}");
    }
    let norm = normalize(net).unwrap();
    println!("trace: {:?}", norm.trace.iter().map(|r| r.to_string()).collect::<Vec<_>>());
    let survivors: Vec<String> = norm.result.atom_vars().iter().map(|v| names[v].clone()).collect();
    println!("survivors: {}", survivors.join(" "));
    let o_n = order_n(net).unwrap();
    println!("order_n(pi): {}", o_n.vars().iter().map(|v| names[v].clone()).collect::<Vec<_>>().join(" < "));
    let paths2 = persistent_paths(&norm.result).unwrap();
    for (i, p) in paths2.paths.iter().enumerate() {
        let named: Vec<String> = p.iter().map(|v| names[v].clone()).collect();
        println!("normal path {i}: {}", named.join(" "));
    }
    let o_n2 = order_n(&norm.result).unwrap();
    println!("order_n(normal): {}", o_n2.vars().iter().map(|v| names[v].clone()).collect::<Vec<_>>().join(" < "));
}

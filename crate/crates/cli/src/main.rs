fn main() {
    println!("starrees");
}

abstract class Abstract18 extends Abstract14 {
}

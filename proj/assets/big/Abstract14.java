abstract class Abstract14 extends Abstract10 {
}

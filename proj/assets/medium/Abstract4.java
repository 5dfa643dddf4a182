abstract class Abstract4 extends Abstract2 {
}

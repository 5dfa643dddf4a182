abstract class Abstract6 extends Abstract2 {
}

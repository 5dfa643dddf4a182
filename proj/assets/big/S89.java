class S89 extends Abstract5 {
  void enter() {
    new S26();
    switch (event) {
      case EV2734:
        new S80();
        new S48();
        if (x1 > 0) {
          if (x9 > 0) {
            new S29();
          } else {
            log("note");
            log("note");
            new S79();
          }
        }
        try {
          try {
            send("msg14");
            new S91();
          } catch (IOException e) {
            new S65();
            new S74();
            new S79();
            new S20();
          } finally {
            send("msg7");
            send("msg5");
          }
          send("msg12");
        } catch (IOException e) {
          new S50();
          send("msg5");
        } catch (IllegalStateException e) {
          new Helper();
          new S40();
          new S8();
        }
        break;
      case EV2735:
        new S27();
        send("msg7");
        switch (event) {
          case EV2736:
            try {
              send("msg1");
              send("msg14");
            } catch (IOException e) {
              new S52();
              send("msg6");
              new State();
            } catch (IOException e) {
              new S46();
              send("msg2");
              new S81();
            }
            if (x6 > 0) {
              new S66();
              new S61();
            } else {
              new S81();
              new S14();
            }
            send("msg16");
            new Helper();
            break;
        }
        break;
    }
    switch (event) {
      case EV2737:
        log("note");
        if (x6 > 0) {
          new S86();
          send("msg11");
        } else {
          new Helper();
          if (x4 > 0) {
            new S69();
            send("msg18");
            send("msg13");
            new S47();
          } else {
            new S96();
            new S97();
            new S8();
            new S13();
          }
          new S52();
        }
        new S83();
        switch (event) {
          case EV2738:
            new S57();
            break;
        }
        break;
      case EV2739:
        try {
          if (x1 > 0) {
            new S27();
            send("msg12");
            new S52();
          } else {
            new S6();
          }
          new S57();
          new S77();
        } catch (TimeoutException e) {
          try {
            send("msg19");
            send("msg3");
            send("msg7");
          } catch (IllegalStateException e) {
            send("msg4");
          } catch (TimeoutException e) {
            send("msg4");
            new S44();
            new S52();
            send("msg11");
          }
          send("msg15");
          if (x3 > 0) {
            send("msg4");
          } else {
            send("msg0");
          }
        }
        break;
    }
  }
  void exit() {
    send("msg2");
    if (x8 > 0) {
      new S42();
      switch (event) {
        case EV2740:
          new S6();
          if (x5 > 0) {
            send("msg2");
            send("msg6");
          } else {
            new S54();
            new State();
            new S98();
            new S88();
          }
          new S13();
          break;
        case EV2741:
          send("msg18");
          switch (event) {
            case EV2742:
              new S65();
              new S84();
              new S81();
              break;
            case EV2743:
              log("note");
              new Helper();
              send("msg10");
              new State();
              break;
            case EV2744:
              send("msg15");
              send("msg0");
              send("msg5");
              send("msg8");
              break;
          }
          new S40();
          if (x7 > 0) {
            new S83();
          }
          break;
      }
      switch (event) {
        case EV2745:
          new S41();
          break;
      }
      switch (event) {
        case EV2746:
          send("msg12");
          switch (event) {
            case EV2747:
              send("msg19");
              new S93();
              break;
            case EV2748:
              new S62();
              log("note");
              new S87();
              send("msg16");
              break;
            case EV2749:
              new S43();
              break;
          }
          break;
        case EV2750:
          new S70();
          break;
      }
    }
    new S14();
  }
  public void handle() {
    send("msg17");
    new S7();
  }
  void tick() {
    try {
      log("note");
      send("msg15");
    } catch (IOException e) {
      switch (event) {
        case EV2751:
          new S55();
          new S11();
          break;
        case EV2752:
          try {
            new S62();
            send("msg11");
          } catch (TimeoutException e) {
            send("msg15");
            new S28();
          } catch (TimeoutException e) {
            new S43();
            new S33();
          }
          new State();
          new S62();
          break;
      }
      new S27();
      switch (event) {
        case EV2753:
          try {
            new S91();
            new S30();
            new S34();
          } catch (IllegalStateException e) {
            new S58();
            new S70();
            new S96();
          }
          break;
        case EV2754:
          new S6();
          try {
            new S35();
            send("msg13");
            send("msg7");
          } finally {
            new Helper();
            send("msg15");
            new Helper();
            new S85();
          }
          if (x5 > 0) {
            send("msg16");
            new S35();
            new S15();
          }
          break;
      }
      new S42();
    } catch (IOException e) {
      if (x6 > 0) {
        switch (event) {
          case EV2755:
            new S95();
            send("msg2");
            new S38();
            break;
          case EV2756:
            new S59();
            log("note");
            send("msg4");
            break;
          case EV2757:
            new S67();
            log("note");
            new S22();
            break;
        }
      } else {
        new Helper();
        send("msg3");
        new S87();
      }
      if (x4 > 0) {
        switch (event) {
          case EV2758:
            new S43();
            new S99();
            new S62();
            new Helper();
            break;
        }
        send("msg17");
        switch (event) {
          case EV2759:
            send("msg4");
            new S78();
            new S48();
            break;
          case EV2760:
            new S70();
            new S86();
            send("msg19");
            break;
        }
        if (x7 > 0) {
          new S41();
          send("msg13");
          new S22();
        } else {
          new S49();
        }
      }
    }
    new S12();
    new S79();
  }
  public void reset() {
    new S14();
  }
  void open() {
    send("msg3");
    new S47();
    send("msg14");
    try {
      if (x9 > 0) {
        switch (event) {
          case EV2761:
            new S19();
            break;
        }
        try {
          send("msg5");
          send("msg10");
        } catch (IllegalStateException e) {
          send("msg14");
          new S66();
          send("msg1");
        } finally {
          new S21();
          new S94();
          new S84();
          new State();
        }
        if (x8 > 0) {
          new S41();
        } else {
          new S4();
          send("msg0");
          new S48();
          send("msg6");
        }
        if (x4 > 0) {
          new S34();
        }
      }
      new S8();
      send("msg4");
      log("note");
    } catch (TimeoutException e) {
      send("msg16");
    }
  }
  public void close() {
    try {
      try {
        new S82();
        try {
          new S38();
        } catch (TimeoutException e) {
          new S51();
          send("msg16");
          new S16();
          new S83();
        }
        new State();
        switch (event) {
          case EV2762:
            new S1();
            log("note");
            break;
          case EV2763:
            new S25();
            break;
        }
      } catch (IllegalStateException e) {
        send("msg6");
        try {
          send("msg2");
        } catch (IllegalStateException e) {
          new Helper();
        } catch (TimeoutException e) {
          log("note");
        }
        try {
          send("msg11");
          new S100();
          send("msg2");
          send("msg19");
        } catch (TimeoutException e) {
          send("msg7");
          new S59();
        } finally {
          send("msg10");
          send("msg8");
          send("msg6");
          log("note");
        }
        new S26();
      } finally {
        send("msg15");
        try {
          send("msg7");
          send("msg10");
        } catch (TimeoutException e) {
          new S82();
          new State();
          new S93();
          send("msg8");
        } catch (IOException e) {
          send("msg6");
        }
      }
      send("msg1");
      if (x1 > 0) {
        new S64();
        new S12();
        log("note");
      } else {
        log("note");
      }
    } catch (TimeoutException e) {
      new S35();
    }
    send("msg7");
    new S62();
    new S57();
  }
  public void start() {
    new S43();
    new S35();
    send("msg11");
  }
  void stop() {
    new S31();
    log("note");
  }
  public void pause() {
    send("msg18");
    new S89();
    send("msg1");
    send("msg0");
  }
}
